#include "caraopt/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "caraopt/normal.hpp"
#include "caraopt/strategies.hpp"

namespace caraopt {

namespace {

int whole_years(const MarketParams& market) {
  const double rounded = std::round(market.T);
  if (std::fabs(market.T - rounded) > 1e-9 || rounded < 2.0) {
    throw std::domain_error(
        "restriction probabilities: T must be a whole number of years >= 2");
  }
  return static_cast<int>(rounded);
}

// Preconditions compare x0 against the t=0 optimal amount; allow the exact
// boundary up to a relative slack so "x0 equals the amount" scenarios work.
bool at_least(double a, double b) { return a >= b - 1e-9 * std::max(1.0, std::fabs(b)); }

}  // namespace

RestrictionProbabilities restriction_probabilities(const MarketParams& market,
                                                   double alpha, double x0) {
  if (!(alpha > 0.0)) throw std::domain_error("restriction probabilities: alpha must be > 0");
  if (!(x0 > 0.0)) throw std::domain_error("restriction probabilities: x0 must be > 0");
  const int T = whole_years(market);
  const double theta = market.theta();
  const double sigma = market.sigma;
  const double forward_x0 = x0 * std::exp(market.r * market.T);

  RestrictionProbabilities out;
  out.p_no_effect = 1.0;
  out.p_fully_constrained = 1.0;
  out.factors_no_effect.reserve(T - 1);
  out.factors_fully_constrained.reserve(T - 1);
  for (int t = 0; t <= T - 2; ++t) {
    const double sqrt_t1 = std::sqrt(static_cast<double>(t + 1));

    const double c_t = alpha / theta * forward_x0 + theta * t - 1.0 / sigma;
    const double f_ne = normal_cdf((c_t + theta) / sqrt_t1);
    out.factors_no_effect.push_back(f_ne);
    out.p_no_effect *= f_ne;

    const double a_t = std::log(theta / (sigma * alpha * x0)) -
                       market.r * (market.T - t - 1) +
                       (market.mu - 0.5 * sigma * sigma) * (t + 1);
    const double f_fc = normal_cdf(a_t / (sigma * sqrt_t1));
    out.factors_fully_constrained.push_back(f_fc);
    out.p_fully_constrained *= f_fc;
  }
  return out;
}

double prob_no_effect(const MarketParams& market, double alpha, double x0) {
  if (!at_least(x0, optimal_amount(market, alpha, 0.0))) {
    throw std::domain_error(
        "prob_no_effect: x0 must be at least the initial optimal amount");
  }
  return restriction_probabilities(market, alpha, x0).p_no_effect;
}

double prob_fully_constrained(const MarketParams& market, double alpha, double x0) {
  if (!at_least(optimal_amount(market, alpha, 0.0), x0)) {
    throw std::domain_error(
        "prob_fully_constrained: x0 must not exceed the initial optimal amount");
  }
  return restriction_probabilities(market, alpha, x0).p_fully_constrained;
}

std::vector<LimitDiagnosticsRow> limit_diagnostics(std::span<const MarketParams> markets,
                                                   double alpha,
                                                   std::optional<double> x0) {
  std::vector<LimitDiagnosticsRow> rows;
  rows.reserve(markets.size());
  for (const MarketParams& market : markets) {
    LimitDiagnosticsRow row;
    row.theta = market.theta();
    row.x0 = x0 ? *x0 : optimal_amount(market, alpha, 0.0);
    const RestrictionProbabilities p = restriction_probabilities(market, alpha, row.x0);
    row.p_no_effect = p.p_no_effect;
    row.p_fully_constrained = p.p_fully_constrained;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace caraopt
