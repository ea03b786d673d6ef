#pragma once

// Vertex grid of K_m x K_n and a verifier for r-equitable colorings.
//
// Vertex (i, j) stands for (x_i, y_j) with x_i in K_m and y_j in K_n. Indices are
// 1-based everywhere a human can see them. Two vertices are adjacent iff they
// differ in both coordinates, so every independent set of size >= 2 lies in a
// single row or a single column.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicolor/params.hpp"

namespace equicolor {

struct Vertex {
  Int row = 1;
  Int col = 1;

  // Row-major order.
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Adjacency in K_m x K_n.
constexpr bool adjacent(const Vertex& u, const Vertex& v) { return u.row != v.row && u.col != v.col; }

/// Definitional route: no two members adjacent.
bool is_independent(std::span<const Vertex> set);

/// Structural route: all members share one row or all share one column.
bool lies_in_one_line(std::span<const Vertex> set);

/// A partition of the m x n grid into k ordered classes; classes may be empty.
struct Coloring {
  Int m = 0;
  Int n = 0;
  std::vector<std::vector<Vertex>> classes;

  Int k() const { return static_cast<Int>(classes.size()); }
  std::vector<Int> class_sizes() const;
  /// Sorts each class row-major; class order is left alone.
  void normalize();

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class ViolationKind { NotPartition, AdjacentPair, Imbalance };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Int> class_indices;  ///< 1-based
  std::vector<Vertex> vertices;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// A coloring whose vertex indices fall outside its own grid. Distinct from a
/// violation: such a coloring is not even a well-formed candidate.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the partition property, independence of every class (pairwise), and
/// max - min class size <= r with empty classes counted as size 0.
VerificationReport verify(Int r, const Coloring& coloring);

}  // namespace equicolor
