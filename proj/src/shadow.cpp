#include "caraopt/shadow.hpp"

#include <cmath>

#include "caraopt/strategies.hpp"

namespace caraopt {

double budget_gap(const Scenario& scenario, double candidate_shadow) {
  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  double gap = candidate_shadow - scenario.investor.x0;
  if (scenario.bounds.lower) {
    gap += put_price(market, alpha, *scenario.bounds.lower, 0.0, candidate_shadow);
  }
  if (scenario.bounds.upper) {
    gap -= call_price(market, alpha, *scenario.bounds.upper, 0.0, candidate_shadow);
  }
  return gap;
}

ShadowSolution solve_shadow(const Scenario& scenario) {
  const double x0 = scenario.investor.x0;
  if (!scenario.bounds.any()) {
    return ShadowSolution{x0, 0.0, 0};
  }

  const double tol = 1e-9 * std::max(1.0, std::fabs(x0));
  const double limit =
      1e3 * std::fabs(x0) * std::exp(std::fabs(scenario.market.r) * scenario.market.T);

  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  const double put0 = scenario.bounds.lower
                          ? put_price(market, alpha, *scenario.bounds.lower, 0.0, x0)
                          : 0.0;
  const double call0 = scenario.bounds.upper
                           ? call_price(market, alpha, *scenario.bounds.upper, 0.0, x0)
                           : 0.0;

  int iterations = 0;
  auto gap = [&](double c) {
    ++iterations;
    return budget_gap(scenario, c);
  };

  // Seed the bracket around the zeroth-order guess x0 - p + c, then expand
  // geometrically until the gap changes sign (it is strictly increasing).
  double lo = x0 - put0 + call0 - 1.0;
  double hi = x0 + call0 + 1.0;
  double glo = gap(lo);
  double ghi = gap(hi);
  double span = std::max(1.0, hi - lo);
  while (glo > 0.0) {
    lo -= span;
    span *= 2.0;
    if (std::fabs(lo) > limit) {
      throw SolverError("solve_shadow: bracket expansion exceeded its limit");
    }
    glo = gap(lo);
  }
  span = std::max(1.0, hi - lo);
  while (ghi < 0.0) {
    hi += span;
    span *= 2.0;
    if (std::fabs(hi) > limit) {
      throw SolverError("solve_shadow: bracket expansion exceeded its limit");
    }
    ghi = gap(hi);
  }

  double root = 0.5 * (lo + hi);
  double groot = gap(root);
  for (int k = 0; k < 200 && std::fabs(groot) > tol; ++k) {
    if (groot > 0.0) {
      hi = root;
      ghi = groot;
    } else {
      lo = root;
      glo = groot;
    }
    // Secant step within the bracket, bisection when it escapes or stalls.
    double next = root - groot * (hi - lo) / (ghi - glo);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    root = next;
    groot = gap(root);
  }
  if (std::fabs(groot) > tol) {
    throw SolverError("solve_shadow: did not reach the residual tolerance");
  }
  return ShadowSolution{root, groot, iterations};
}

ShadowSolution resolve_shadow(Scenario& scenario) {
  ShadowSolution sol = solve_shadow(scenario);
  scenario.shadow_x0 = sol.shadow_x0;
  return sol;
}

double balanced_upper_bound(double x0, const MarketParams& market, double k_lower) {
  const double k_upper = 2.0 * x0 * std::exp(market.r * market.T) - k_lower;
  if (!(k_upper > k_lower)) {
    throw ValidationError("balanced_upper_bound: resulting cap does not exceed the floor");
  }
  return k_upper;
}

}  // namespace caraopt
