#include "equicolor/coloring_model.hpp"

#include <algorithm>
#include <sstream>

namespace equicolor {

namespace {

std::string format_vertex(const Vertex& v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

}  // namespace

bool is_independent(std::span<const Vertex> set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (adjacent(set[a], set[b])) return false;
    }
  }
  return true;
}

bool lies_in_one_line(std::span<const Vertex> set) {
  if (set.empty()) return true;
  const bool one_row = std::all_of(set.begin(), set.end(),
                                   [&](const Vertex& v) { return v.row == set.front().row; });
  const bool one_col = std::all_of(set.begin(), set.end(),
                                   [&](const Vertex& v) { return v.col == set.front().col; });
  return one_row || one_col;
}

std::vector<Int> Coloring::class_sizes() const {
  std::vector<Int> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(static_cast<Int>(c.size()));
  return sizes;
}

void Coloring::normalize() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotPartition: return "not-partition";
    case ViolationKind::AdjacentPair: return "adjacent-pair";
    case ViolationKind::Imbalance: return "imbalance";
  }
  return "?";
}

VerificationReport verify(Int r, const Coloring& coloring) {
  if (coloring.m < 1 || coloring.n < 1) throw StructuralError("grid dimensions must be positive");
  if (r < 0) throw DomainError("r must be >= 0");

  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    for (const Vertex& v : coloring.classes[c]) {
      if (v.row < 1 || v.row > coloring.m || v.col < 1 || v.col > coloring.n) {
        throw StructuralError("class " + std::to_string(c + 1) + " contains " + format_vertex(v) +
                              " outside the " + std::to_string(coloring.m) + "x" +
                              std::to_string(coloring.n) + " grid");
      }
    }
  }

  VerificationReport report;

  // (a) partition: every grid vertex exactly once.
  std::vector<Int> owner(static_cast<std::size_t>(coloring.m * coloring.n), 0);
  auto slot = [&](const Vertex& v) {
    return static_cast<std::size_t>((v.row - 1) * coloring.n + (v.col - 1));
  };
  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    for (const Vertex& v : coloring.classes[c]) {
      Int& o = owner[slot(v)];
      if (o != 0) {
        report.violations.push_back({ViolationKind::NotPartition,
                                     {o, static_cast<Int>(c + 1)},
                                     {v},
                                     format_vertex(v) + " appears more than once"});
      } else {
        o = static_cast<Int>(c + 1);
      }
    }
  }
  std::vector<Vertex> missing;
  for (Int i = 1; i <= coloring.m; ++i) {
    for (Int j = 1; j <= coloring.n; ++j) {
      if (owner[slot({i, j})] == 0) missing.push_back({i, j});
    }
  }
  if (!missing.empty()) {
    report.violations.push_back({ViolationKind::NotPartition, {}, missing,
                                 std::to_string(missing.size()) + " vertices are uncolored, first " +
                                     format_vertex(missing.front())});
  }

  // (b) independence, by pairwise adjacency. One violation per offending class.
  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    const auto& members = coloring.classes[c];
    bool found = false;
    for (std::size_t a = 0; a < members.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (adjacent(members[a], members[b])) {
          report.violations.push_back({ViolationKind::AdjacentPair,
                                       {static_cast<Int>(c + 1)},
                                       {members[a], members[b]},
                                       "class " + std::to_string(c + 1) + " contains adjacent " +
                                           format_vertex(members[a]) + " and " +
                                           format_vertex(members[b])});
          found = true;
          break;
        }
      }
    }
  }

  // (c) balance.
  if (!coloring.classes.empty()) {
    const auto sizes = coloring.class_sizes();
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > r) {
      std::ostringstream detail;
      detail << "class sizes " << *hi << " and " << *lo << " differ by " << (*hi - *lo)
             << " > r = " << r;
      report.violations.push_back({ViolationKind::Imbalance,
                                   {static_cast<Int>(hi - sizes.begin()) + 1,
                                    static_cast<Int>(lo - sizes.begin()) + 1},
                                   {},
                                   detail.str()});
    }
  }
  return report;
}

}  // namespace equicolor
