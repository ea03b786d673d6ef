#include "equicolor/sweep.hpp"

#include <algorithm>
#include <exception>

#include "equicolor/constructor.hpp"

namespace equicolor {

namespace {

AgreementResult evaluate(const AgreementCase& c, const OracleBudget& budget) {
  AgreementResult out;
  out.params = c.params;
  out.k = c.k;
  out.formula_kronecker = kronecker_colorable(c.params, c.k);
  out.formula_multipartite = multipartite_colorable(c.params, c.k);
  try {
    out.oracle_kronecker = oracle_kronecker_colorable(c.params, c.k, budget);
  } catch (const BudgetExceeded&) {
  }
  try {
    out.oracle_multipartite = oracle_multipartite_colorable(c.params, c.k, budget);
  } catch (const BudgetExceeded&) {
  }
  return out;
}

std::vector<Params> table_params(IntRange m_range, IntRange n_range, IntRange r_range) {
  if (!m_range.empty() && m_range.lo < 2) throw DomainError("table requires m >= 2");
  if (!n_range.empty() && n_range.lo < 1) throw DomainError("table requires n >= 1");
  if (!r_range.empty() && r_range.lo < 1) throw DomainError("table requires r >= 1");
  std::vector<Params> out;
  for (Int m = m_range.lo; m <= m_range.hi; ++m) {
    for (Int n = std::max(n_range.lo, m); n <= n_range.hi; ++n) {
      for (Int r = r_range.lo; r <= r_range.hi; ++r) out.emplace_back(m, n, r);
    }
  }
  return out;
}

ThresholdRow table_row(const Params& p) {
  ThresholdRow row;
  row.m = p.m;
  row.n = p.n;
  row.r = p.r;
  row.kronecker = threshold_kronecker(p);
  row.multipartite_theta = theta_balanced(p.n, p.r);
  row.multipartite = threshold_multipartite(p);
  row.equal = row.kronecker.value == row.multipartite;
  if (p.r >= 2) {
    row.equ_bound = equ_bound(p.m, p.r);
    row.clears_bound = p.n >= *row.equ_bound;
  }
  return row;
}

std::vector<Params> construction_params(Int max_n, IntRange r_range) {
  std::vector<Params> out;
  for (Int m = 2; m <= max_n; ++m) {
    for (Int n = m; n <= max_n; ++n) {
      for (Int r = r_range.lo; r <= r_range.hi; ++r) out.emplace_back(m, n, r);
    }
  }
  return out;
}

ConstructionCheck check_construction(const Params& p) {
  ConstructionCheck out;
  out.params = p;
  auto fail = [&](Int k, const std::string& why) {
    if (out.failures++ == 0) {
      out.first_failure = "m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) +
                          " r=" + std::to_string(p.r) + " k=" + std::to_string(k) + ": " + why;
    }
  };
  for (Int k = 1; k <= p.vertices() + 1; ++k) {
    if (!kronecker_colorable(p, k)) {
      try {
        (void)color_kronecker(p, k);
        fail(k, "constructed a coloring the decision procedure rejects");
      } catch (const NotColorable&) {
      }
      continue;
    }
    ++out.colorable_k;
    try {
      const Coloring c = color_kronecker(p, k);
      if (c.k() != k) {
        fail(k, "produced " + std::to_string(c.k()) + " classes");
        continue;
      }
      const VerificationReport report = verify(p.r, c);
      if (!report.valid()) fail(k, report.violations.front().detail);
    } catch (const std::exception& e) {
      fail(k, e.what());
    }
  }
  return out;
}

// Runs body(i) for i in [0, count) across threads and rethrows the first
// exception after the loop.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(equicolor_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<AgreementCase> agreement_grid(Int max_vertices, IntRange r_range) {
  std::vector<AgreementCase> cases;
  for (Int m = 2; m * m <= max_vertices; ++m) {
    for (Int n = m; m * n <= max_vertices; ++n) {
      for (Int r = r_range.lo; r <= r_range.hi; ++r) {
        for (Int k = 1; k <= m * n + 1; ++k) cases.push_back({Params(m, n, r), k});
      }
    }
  }
  return cases;
}

std::vector<AgreementResult> agreement_sweep_serial(const std::vector<AgreementCase>& cases,
                                                    const OracleBudget& budget) {
  std::vector<AgreementResult> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(evaluate(c, budget));
  return out;
}

std::vector<AgreementResult> agreement_sweep_parallel(const std::vector<AgreementCase>& cases,
                                                      const OracleBudget& budget) {
  std::vector<AgreementResult> out(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) { out[i] = evaluate(cases[i], budget); });
  return out;
}

std::vector<ThresholdRow> threshold_table_serial(IntRange m_range, IntRange n_range, IntRange r_range) {
  std::vector<ThresholdRow> out;
  for (const Params& p : table_params(m_range, n_range, r_range)) out.push_back(table_row(p));
  return out;
}

std::vector<ThresholdRow> threshold_table_parallel(IntRange m_range, IntRange n_range, IntRange r_range) {
  const std::vector<Params> params = table_params(m_range, n_range, r_range);
  std::vector<ThresholdRow> out(params.size());
  parallel_for(params.size(), [&](std::size_t i) { out[i] = table_row(params[i]); });
  return out;
}

std::vector<ConstructionCheck> construction_sweep_serial(Int max_n, IntRange r_range) {
  std::vector<ConstructionCheck> out;
  for (const Params& p : construction_params(max_n, r_range)) out.push_back(check_construction(p));
  return out;
}

std::vector<ConstructionCheck> construction_sweep_parallel(Int max_n, IntRange r_range) {
  const std::vector<Params> params = construction_params(max_n, r_range);
  std::vector<ConstructionCheck> out(params.size());
  parallel_for(params.size(), [&](std::size_t i) { out[i] = check_construction(params[i]); });
  return out;
}

}  // namespace equicolor
