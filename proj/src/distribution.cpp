#include "caraopt/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "caraopt/normal.hpp"

namespace caraopt {

double TerminalLaw::cdf(double x) const {
  if (lower && x < *lower) return 0.0;
  if (upper && x >= *upper) return 1.0;
  return normal_cdf((x - mean) / sd);
}

TerminalLaw terminal_law(const Scenario& scenario) {
  const double shadow = scenario.shadow();  // throws when unresolved
  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  const double theta = market.theta();

  TerminalLaw law;
  law.mean = shadow * std::exp(market.r * market.T) + market.T * theta * theta / alpha;
  law.sd = theta * std::sqrt(market.T) / alpha;
  law.lower = scenario.bounds.lower;
  law.upper = scenario.bounds.upper;
  if (law.lower) law.mass_lower = normal_cdf((*law.lower - law.mean) / law.sd);
  if (law.upper) law.mass_upper = 1.0 - normal_cdf((*law.upper - law.mean) / law.sd);
  return law;
}

double quantile(const TerminalLaw& law, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile: p must lie in (0, 1)");
  }
  double q = law.mean + law.sd * normal_quantile(p);
  if (law.lower && q < *law.lower) q = *law.lower;
  if (law.upper && q > *law.upper) q = *law.upper;
  return q;
}

double quantile_shift(const Scenario& constrained, const Scenario& unconstrained,
                      double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile_shift: p must lie in (0, 1)");
  }
  const MarketParams& a = constrained.market;
  const MarketParams& b = unconstrained.market;
  const bool same_market = a.r == b.r && a.mu == b.mu && a.sigma == b.sigma && a.T == b.T;
  const bool same_investor =
      constrained.investor.alpha == unconstrained.investor.alpha &&
      constrained.investor.x0 == unconstrained.investor.x0;
  if (!same_market || !same_investor) {
    throw ValidationError("quantile_shift: scenarios must share market and investor");
  }
  return (constrained.shadow() - unconstrained.shadow()) * std::exp(a.r * a.T);
}

}  // namespace caraopt
