#pragma once

// Closed-form thresholds and decision procedures for r-equitable colorings of
// the Kronecker product K_m x K_n and the complete multipartite graph K_{m(n)}.
//
// Everything here is exact integer arithmetic. Functions are pure and safe to
// call concurrently.

#include <optional>
#include <string_view>

#include "equicolor/params.hpp"

namespace equicolor {

/// How n - r*floor(n/(m+r)) compares against m*ceil(n/(m+r)).
enum class Trichotomy { Less, Equal, Greater };

struct GammaResult {
  Int value = 0;  ///< min of the two expressions above
  Trichotomy trichotomy = Trichotomy::Equal;
  Int residue = 0;  ///< n mod (m+r)
};

enum class ThresholdCase { ResidueSmallGap, Otherwise };

struct ThresholdResult {
  Int value = 0;
  ThresholdCase threshold_case = ThresholdCase::Otherwise;
  std::optional<Int> theta;  ///< set only for ThresholdCase::Otherwise
  GammaResult gamma;
};

/// Why kronecker_colorable / multipartite_colorable answered the way it did.
enum class DecisionReason {
  BelowChromatic,               ///< k < m = chromatic number
  AtOrAboveGamma,               ///< k >= Gamma, the Kronecker construction applies
  MultipartiteCondition,        ///< the K_{m(n)} balance condition holds
  MultipartiteConditionFailed,  ///< the K_{m(n)} balance condition fails
};

struct Decision {
  bool colorable = false;
  DecisionReason reason = DecisionReason::BelowChromatic;
};

std::string_view to_string(Trichotomy t);
std::string_view to_string(ThresholdCase c);
std::string_view to_string(DecisionReason r);

/// Gamma = min{n - r*floor(n/(m+r)), m*ceil(n/(m+r))}. Requires m >= 2.
GammaResult gamma(const Params& p);

/// Smallest theta >= 1 with floor(n/(theta+1)) < ceil(n/(theta+r)).
Int theta_balanced(Int n, Int r);

/// Smallest theta >= 1 satisfying the balance condition of theta_balanced and
/// m*ceil(n/(theta+r)) <= Gamma. Requires 2 <= m <= n.
Int theta_min(const Params& p);

/// Chromatic threshold of K_{m(n)}: m*ceil(n/(theta+r)), theta = theta_balanced(n, r).
Int threshold_multipartite(const Params& p);

/// Chromatic threshold of K_m x K_n. Requires 2 <= m <= n; callers swap first.
ThresholdResult threshold_kronecker(const Params& p);

/// Whether K_{m(n)} has an r-equitable k-coloring.
bool multipartite_colorable(const Params& p, Int k);
Decision decide_multipartite(const Params& p, Int k);

/// Whether K_m x K_n has an r-equitable k-coloring: k >= m and either k >= Gamma
/// or the multipartite condition holds. Requires 2 <= m <= n.
bool kronecker_colorable(const Params& p, Int k);
Decision decide_kronecker(const Params& p, Int k);

/// Smallest integer n0 >= (m+r)(m+2r-1)/(r-1). For n >= n0 the two graphs share
/// r-equitable colorability. Requires m >= 2, r >= 2.
Int equ_bound(Int m, Int r);

}  // namespace equicolor
