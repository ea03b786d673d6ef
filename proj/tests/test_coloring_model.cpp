#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "equicolor/coloring_model.hpp"

using namespace equicolor;

namespace {

std::vector<Vertex> row_cells(Int row, Int from, Int to) {
  std::vector<Vertex> out;
  for (Int j = from; j <= to; ++j) out.push_back({row, j});
  return out;
}

bool has_kind(const VerificationReport& report, ViolationKind kind) {
  for (const auto& v : report.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST(Adjacent, DiffersInBothCoordinates) {
  EXPECT_TRUE(adjacent({1, 1}, {2, 2}));
  EXPECT_FALSE(adjacent({1, 1}, {1, 5}));
  EXPECT_FALSE(adjacent({3, 2}, {1, 2}));
}

TEST(Adjacent, SymmetricAndIrreflexive) {
  for (Int a = 1; a <= 4; ++a) {
    for (Int b = 1; b <= 4; ++b) {
      const Vertex u{a, b};
      EXPECT_FALSE(adjacent(u, u));
      for (Int c = 1; c <= 4; ++c) {
        for (Int d = 1; d <= 4; ++d) {
          const Vertex v{c, d};
          EXPECT_EQ(adjacent(u, v), adjacent(v, u));
        }
      }
    }
  }
}

TEST(IsIndependent, Examples) {
  const std::vector<Vertex> one_row = {{1, 1}, {1, 2}, {1, 3}};
  const std::vector<Vertex> one_col = {{1, 1}, {2, 1}};
  const std::vector<Vertex> corner = {{1, 1}, {1, 2}, {2, 1}};
  EXPECT_TRUE(is_independent(one_row));
  EXPECT_TRUE(is_independent(one_col));
  EXPECT_FALSE(is_independent(corner));
  EXPECT_TRUE(is_independent(std::vector<Vertex>{}));
  EXPECT_TRUE(is_independent(std::vector<Vertex>{{2, 3}}));
}

// Every subset of every grid with m, n >= 2 and m*n <= 12.
TEST(IsIndependent, PairwiseAgreesWithOneLineOnAllSmallSubsets) {
  for (Int m = 2; m <= 6; ++m) {
    for (Int n = 2; m * n <= 12; ++n) {
      const Int cells = m * n;
      for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
        std::vector<Vertex> set;
        for (Int c = 0; c < cells; ++c) {
          if (mask >> c & 1u) set.push_back({c / n + 1, c % n + 1});
        }
        ASSERT_EQ(is_independent(set), lies_in_one_line(set)) << m << "x" << n << " mask " << mask;
      }
    }
  }
}

TEST(Verify, TwoRowsOfTwoIsValid) {
  const Coloring c{2, 2, {{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}}};
  EXPECT_TRUE(verify(1, c).valid());
}

TEST(Verify, DiagonalsAreAdjacentPairs) {
  const Coloring c{2, 2, {{{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}}};
  const VerificationReport report = verify(1, c);
  EXPECT_FALSE(report.valid());
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0].kind, ViolationKind::AdjacentPair);
  EXPECT_EQ(report.violations[0].class_indices, std::vector<Int>{1});
  EXPECT_EQ(report.violations[1].kind, ViolationKind::AdjacentPair);
  EXPECT_EQ(report.violations[1].class_indices, std::vector<Int>{2});
}

TEST(Verify, UnevenSizesAreImbalance) {
  const Coloring c{2, 4, {row_cells(1, 1, 4), {{2, 1}}, row_cells(2, 2, 4)}};
  const VerificationReport report = verify(1, c);
  ASSERT_EQ(report.violations.size(), 1u);
  const Violation& v = report.violations.front();
  EXPECT_EQ(v.kind, ViolationKind::Imbalance);
  EXPECT_EQ(v.class_indices, (std::vector<Int>{1, 2}));  // sizes 4 and 1
  EXPECT_TRUE(verify(3, c).valid());
}

TEST(Verify, MissingAndDuplicateVerticesBreakThePartition) {
  const Coloring missing{2, 2, {{{1, 1}, {1, 2}}, {{2, 1}}}};
  EXPECT_TRUE(has_kind(verify(1, missing), ViolationKind::NotPartition));

  const Coloring duplicate{2, 2, {{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}, {1, 1}}}};
  const auto report = verify(1, duplicate);
  EXPECT_TRUE(has_kind(report, ViolationKind::NotPartition));
  EXPECT_TRUE(has_kind(report, ViolationKind::AdjacentPair));  // (1,1) with (2,2)
}

TEST(Verify, EmptyClassesCountAsSizeZero) {
  const Coloring c{2, 2, {{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}, {}}};
  EXPECT_TRUE(has_kind(verify(1, c), ViolationKind::Imbalance));
  EXPECT_TRUE(verify(2, c).valid());
}

TEST(Verify, OutOfRangeVertexIsStructural) {
  const Coloring c{2, 2, {{{1, 1}, {1, 2}}, {{2, 1}, {3, 2}}}};
  EXPECT_THROW(verify(1, c), StructuralError);
  const Coloring zero{2, 2, {{{0, 1}}}};
  EXPECT_THROW(verify(1, zero), StructuralError);
}

// Random row/column-line partitions are always proper; random reassignments of one
// vertex across lines are caught.
TEST(Verify, RandomLinePartitions) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const Int m = std::uniform_int_distribution<Int>(2, 6)(rng);
    const Int n = std::uniform_int_distribution<Int>(m, 8)(rng);
    Coloring c{m, n, {}};
    for (Int i = 1; i <= m; ++i) {
      Int j = 1;
      while (j <= n) {
        const Int len = std::uniform_int_distribution<Int>(1, n - j + 1)(rng);
        c.classes.push_back(row_cells(i, j, j + len - 1));
        j += len;
      }
    }
    ASSERT_TRUE(verify(n, c).valid());

    // Move (1,1) into a class that lives entirely in another row and column.
    auto& first = c.classes.front();
    if (first.size() < 2) continue;
    const Vertex moved = first.front();
    first.erase(first.begin());
    auto& target = c.classes.back();  // row m, contains some (m, j) with j possibly 1
    target.push_back(moved);
    const bool clash = std::any_of(target.begin(), target.end() - 1,
                                   [&](const Vertex& v) { return adjacent(v, moved); });
    ASSERT_EQ(has_kind(verify(n, c), ViolationKind::AdjacentPair), clash);
  }
}
