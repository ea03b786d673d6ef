#include "equicolor/closed_forms.hpp"

#include <string>

namespace equicolor {

namespace {

void require_multipartite(const Params& p) {
  if (p.m < 2) throw DomainError("m must be >= 2 (got " + std::to_string(p.m) + ")");
}

void require_kronecker(const Params& p) {
  require_multipartite(p);
  if (p.n < p.m) {
    throw DomainError("n must be >= m (got m=" + std::to_string(p.m) +
                      ", n=" + std::to_string(p.n) + "); swap to canonical orientation");
  }
}

bool balanced_window(Int n, Int r, Int theta) {
  return floor_div(n, theta + 1) < ceil_div(n, theta + r);
}

// ceil(n/floor(k/m)) - floor(n/ceil(k/m)) <= r, for k >= m.
bool multipartite_balance(const Params& p, Int k) {
  const Int lo_colors = floor_div(k, p.m);
  const Int hi_colors = ceil_div(k, p.m);
  return ceil_div(p.n, lo_colors) - floor_div(p.n, hi_colors) <= p.r;
}

}  // namespace

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Less: return "less";
    case Trichotomy::Equal: return "equal";
    case Trichotomy::Greater: return "greater";
  }
  return "?";
}

std::string_view to_string(ThresholdCase c) {
  switch (c) {
    case ThresholdCase::ResidueSmallGap: return "residue-small-gap";
    case ThresholdCase::Otherwise: return "otherwise";
  }
  return "?";
}

std::string_view to_string(DecisionReason r) {
  switch (r) {
    case DecisionReason::BelowChromatic: return "below-chromatic";
    case DecisionReason::AtOrAboveGamma: return "at-or-above-gamma";
    case DecisionReason::MultipartiteCondition: return "multipartite-condition";
    case DecisionReason::MultipartiteConditionFailed: return "multipartite-condition-failed";
  }
  return "?";
}

GammaResult gamma(const Params& p) {
  require_multipartite(p);
  const Int period = p.m + p.r;
  const Int reduced = p.n - p.r * floor_div(p.n, period);
  const Int blocks = p.m * ceil_div(p.n, period);

  GammaResult g;
  g.residue = floor_mod(p.n, period);
  g.value = reduced < blocks ? reduced : blocks;
  if (reduced < blocks) {
    g.trichotomy = Trichotomy::Less;
  } else if (reduced == blocks) {
    g.trichotomy = Trichotomy::Equal;
  } else {
    g.trichotomy = Trichotomy::Greater;
  }
  return g;
}

Int theta_balanced(Int n, Int r) {
  if (n < 1 || r < 1) throw DomainError("theta_balanced requires n >= 1 and r >= 1");
  // theta = n always qualifies: floor(n/(n+1)) = 0 < 1.
  for (Int theta = 1; theta < n; ++theta) {
    if (balanced_window(n, r, theta)) return theta;
  }
  return n;
}

Int theta_min(const Params& p) {
  require_kronecker(p);
  const Int cap = gamma(p).value;
  // theta = n qualifies since Gamma >= m whenever n >= m >= 2.
  for (Int theta = 1; theta < p.n; ++theta) {
    if (balanced_window(p.n, p.r, theta) && p.m * ceil_div(p.n, theta + p.r) <= cap) {
      return theta;
    }
  }
  return p.n;
}

Int threshold_multipartite(const Params& p) {
  require_multipartite(p);
  const Int theta = theta_balanced(p.n, p.r);
  return p.m * ceil_div(p.n, theta + p.r);
}

ThresholdResult threshold_kronecker(const Params& p) {
  require_kronecker(p);
  ThresholdResult result;
  result.gamma = gamma(p);

  const Int period = p.m + p.r;
  const Int t = result.gamma.residue;
  if (t >= 2 && t <= p.m - 1) {
    // n >= m > t forces floor(n/(m+r)) >= 1 here.
    const Int lo_blocks = floor_div(p.n, period);
    const Int hi_blocks = ceil_div(p.n, period);
    if (ceil_div(p.n, lo_blocks) - floor_div(p.n, hi_blocks) > p.r) {
      result.threshold_case = ThresholdCase::ResidueSmallGap;
      result.value = p.n - p.r * lo_blocks;
      return result;
    }
  }

  const Int theta = theta_min(p);
  result.threshold_case = ThresholdCase::Otherwise;
  result.theta = theta;
  result.value = p.m * ceil_div(p.n, theta + p.r);
  return result;
}

Decision decide_multipartite(const Params& p, Int k) {
  require_multipartite(p);
  if (k < 1) throw DomainError("k must be >= 1 (got " + std::to_string(k) + ")");
  if (k < p.m) return {false, DecisionReason::BelowChromatic};
  if (multipartite_balance(p, k)) return {true, DecisionReason::MultipartiteCondition};
  return {false, DecisionReason::MultipartiteConditionFailed};
}

bool multipartite_colorable(const Params& p, Int k) { return decide_multipartite(p, k).colorable; }

Decision decide_kronecker(const Params& p, Int k) {
  require_kronecker(p);
  if (k < 1) throw DomainError("k must be >= 1 (got " + std::to_string(k) + ")");
  if (k < p.m) return {false, DecisionReason::BelowChromatic};
  if (k >= gamma(p).value) return {true, DecisionReason::AtOrAboveGamma};
  return decide_multipartite(p, k);
}

bool kronecker_colorable(const Params& p, Int k) { return decide_kronecker(p, k).colorable; }

Int equ_bound(Int m, Int r) {
  if (m < 2) throw DomainError("equ_bound requires m >= 2 (got " + std::to_string(m) + ")");
  if (r < 2) {
    throw DomainError("equ_bound requires r >= 2 (got " + std::to_string(r) +
                      "); the equivalence can fail for r = 1");
  }
  return ceil_div((m + r) * (m + 2 * r - 1), r - 1);
}

}  // namespace equicolor
