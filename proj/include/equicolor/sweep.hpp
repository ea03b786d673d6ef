#pragma once

// Bulk evaluation over parameter grids. Each kernel comes as a serial reference
// and an OpenMP version; both return rows in the same deterministic order, and
// the tests hold them to identical output.

#include <optional>
#include <string>
#include <vector>

#include "equicolor/closed_forms.hpp"
#include "equicolor/oracle.hpp"

namespace equicolor {

struct IntRange {
  Int lo = 0;
  Int hi = -1;  ///< inclusive; hi < lo is an empty range
  bool empty() const { return hi < lo; }
};

// --- formula vs oracle -------------------------------------------------------

struct AgreementCase {
  Params params;
  Int k = 1;
};

struct AgreementResult {
  Params params;
  Int k = 1;
  bool formula_kronecker = false;
  bool formula_multipartite = false;
  std::optional<bool> oracle_kronecker;     ///< nullopt: budget exceeded (skip)
  std::optional<bool> oracle_multipartite;  ///< nullopt: budget exceeded (skip)

  bool kronecker_mismatch() const { return oracle_kronecker && *oracle_kronecker != formula_kronecker; }
  bool multipartite_mismatch() const {
    return oracle_multipartite && *oracle_multipartite != formula_multipartite;
  }
};

/// Every (m, n, r, k) with 2 <= m <= n, m*n <= max_vertices, r in r_range, k in [1, m*n + 1].
std::vector<AgreementCase> agreement_grid(Int max_vertices, IntRange r_range);

std::vector<AgreementResult> agreement_sweep_serial(const std::vector<AgreementCase>& cases,
                                                    const OracleBudget& budget);
std::vector<AgreementResult> agreement_sweep_parallel(const std::vector<AgreementCase>& cases,
                                                      const OracleBudget& budget);

// --- threshold table ---------------------------------------------------------

struct ThresholdRow {
  Int m = 0;
  Int n = 0;
  Int r = 0;
  ThresholdResult kronecker;
  Int multipartite = 0;
  Int multipartite_theta = 0;
  bool equal = false;
  std::optional<Int> equ_bound;  ///< only for r >= 2
  bool clears_bound = false;     ///< n >= equ_bound
  /// Thresholds differ although n clears the bound.
  bool falsifies_equivalence() const { return clears_bound && !equal; }
};

/// Rows in lexicographic (m, n, r) order; pairs with n < m are skipped. Requires m >= 2.
std::vector<ThresholdRow> threshold_table_serial(IntRange m_range, IntRange n_range, IntRange r_range);
std::vector<ThresholdRow> threshold_table_parallel(IntRange m_range, IntRange n_range, IntRange r_range);

// --- constructor soundness ---------------------------------------------------

struct ConstructionCheck {
  Params params;
  Int colorable_k = 0;  ///< number of colorable k values constructed and verified
  Int failures = 0;
  std::string first_failure;
};

/// For every 2 <= m <= n <= max_n and r in r_range, builds color_kronecker for each
/// colorable k in [1, m*n + 1], verifies it, and checks that every other k is refused.
std::vector<ConstructionCheck> construction_sweep_serial(Int max_n, IntRange r_range);
std::vector<ConstructionCheck> construction_sweep_parallel(Int max_n, IntRange r_range);

}  // namespace equicolor
