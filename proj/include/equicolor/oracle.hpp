#pragma once

// Exhaustive ground truth for small instances. Nothing here calls into
// closed_forms; the two must agree but share no code.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "equicolor/params.hpp"

namespace equicolor {

struct OracleBudget {
  Int max_vertices = 24;
  Int max_k = 64;
  Int node_limit = 200'000'000;
};

/// A search hit one of the budget caps. Never reported as a false verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { Kronecker, Multipartite };

/// Undirected graph on up to 64 vertices as adjacency bitmasks.
struct SmallGraph {
  std::vector<std::uint64_t> adjacency;
  Int size() const { return static_cast<Int>(adjacency.size()); }
};

/// K_m x K_n with vertices numbered along `order`, a permutation of the
/// row-major cell indices 0..m*n-1. Empty order means row-major.
SmallGraph kronecker_graph(Int m, Int n, const std::vector<Int>& order = {});

/// K_{m(n)}, part i holding the row-major cells of row i.
SmallGraph multipartite_graph(Int m, Int n);

/// Backtracking: does `graph` split into k independent sets whose sizes pairwise
/// differ by at most r? Empty classes count as size 0.
bool oracle_graph_colorable(const SmallGraph& graph, Int k, Int r, const OracleBudget& budget);

bool oracle_kronecker_colorable(const Params& p, Int k, const OracleBudget& budget = {});

/// Searches per-part class counts and a common size window directly, without
/// the closed-form balance condition.
bool oracle_multipartite_colorable(const Params& p, Int k, const OracleBudget& budget = {});

/// Least k such that every k' in [k, m*n + 1] is colorable. Every k' > m*n is
/// colorable (singletons plus empty classes), so the scan is finite.
Int oracle_threshold(const Params& p, Family family, const OracleBudget& budget = {});

}  // namespace equicolor
