#pragma once

// Witness colorings. Ties are always broken lowest index first: full-column
// classes take the leftmost columns, extra colors go to the lowest rows, and
// larger classes come before smaller ones within a row or column.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicolor/closed_forms.hpp"
#include "equicolor/coloring_model.hpp"

namespace equicolor {

struct SizeWindowPlan {
  Int count = 0;
  Int lo = 0;
  Int r = 0;
  std::vector<Int> sizes;  ///< non-increasing, each in [lo, lo + r], sums to the total
};

/// split_sizes could not fit the total into count classes of the window.
class InfeasibleWindow : public std::runtime_error {
 public:
  enum class Bound { Lower, Upper };
  InfeasibleWindow(Bound bound, const std::string& what) : std::runtime_error(what), bound_(bound) {}
  /// Lower: total < lo*count. Upper: total > (lo+r)*count.
  Bound bound() const { return bound_; }

 private:
  Bound bound_;
};

/// Refusal to construct a coloring that cannot exist.
class NotColorable : public std::runtime_error {
 public:
  NotColorable(DecisionReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  DecisionReason reason() const { return reason_; }

 private:
  DecisionReason reason_;
};

/// Splits total items into count classes with sizes in [lo, lo + r], as evenly as
/// possible. Feasible iff lo*count <= total <= (lo+r)*count.
SizeWindowPlan split_sizes(Int total, Int count, Int lo, Int r);

/// Coloring of K_{m(n)} (part i = row i) that is also a coloring of K_m x K_n.
/// Every class lies inside one row.
Coloring color_multipartite(const Params& p, Int k);

/// r-equitable k-coloring of K_m x K_n. Requires 2 <= m <= n.
///   m <= k < Gamma : color_multipartite (also k = m = n)
///   Gamma <= k <= n: full-column classes plus row splits
///   n < k <= m*n   : color_mixed_lines
///   k > m*n        : singletons followed by empty classes
Coloring color_kronecker(const Params& p, Int k);

/// Edgeless grid (m = 1 or n = 1): one row or column cut into k near-equal pieces.
Coloring color_edgeless(Int m, Int n, Int k);

/// Row/column mixture for large k. The leftmost `shared` columns each give
/// `share` cells, spread cyclically over the rows, to column classes; all other
/// cells of each row go to row classes. Every line is cut into pieces with sizes
/// in [lo, lo + r]. Searches lo from floor(mn/k) down, then shared and share, and
/// returns the first layout with exactly k classes, or nullopt.
std::optional<Coloring> color_mixed_lines(const Params& p, Int k);

}  // namespace equicolor
