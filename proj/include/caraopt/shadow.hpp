#pragma once

#include "caraopt/types.hpp"

namespace caraopt {

struct ShadowSolution {
  double shadow_x0 = 0.0;
  double residual = 0.0;  ///< budget mismatch at the returned root
  int iterations = 0;
};

/// Budget mismatch of a candidate shadow initial wealth:
///   candidate + put(0, candidate) [floor] - call(0, candidate) [cap] - x0.
/// Continuous and strictly increasing in the candidate.
double budget_gap(const Scenario& scenario, double candidate_shadow);

/// Root of budget_gap to |residual| <= 1e-9 max(1, x0). Bracketed bisection
/// with secant acceleration; the bracket grows geometrically from a seed
/// around x0 and the search fails once it exceeds 1e3 |x0| e^{|r|T}
/// (inconsistent bounds). Without bounds the root is x0 itself.
ShadowSolution solve_shadow(const Scenario& scenario);

/// Stores the solved shadow value on the scenario and returns the solution.
ShadowSolution resolve_shadow(Scenario& scenario);

/// Cap strike that exactly offsets the floor at strike k_lower:
/// 2 x0 e^{rT} - k_lower, so the shadow value collapses back to x0.
/// Throws ValidationError when the result does not exceed k_lower.
double balanced_upper_bound(double x0, const MarketParams& market, double k_lower);

}  // namespace caraopt
