#include "caraopt/strategies.hpp"

#include <cmath>
#include <stdexcept>

#include "caraopt/normal.hpp"

namespace caraopt {

namespace {

double tau_before_maturity(const MarketParams& market, double t, const char* who) {
  if (!(t >= 0.0 && t < market.T)) {
    throw std::domain_error(std::string(who) + ": t must lie in [0, T)");
  }
  return market.T - t;
}

// Phi(d) / (d Phi(d) + phi(d)). The denominator is strictly positive; for
// deep negative d both sides underflow together, so switch to the Mills-type
// expansion |d| (1 + 2u - 6u^2 + 42u^3 - 414u^4), u = 1/d^2, which keeps the
// replication fractions finite for any argument.
double hedge_ratio(double d) {
  if (d > -26.0) {
    const double cdf = normal_cdf(d);
    return cdf / (d * cdf + normal_pdf(d));
  }
  const double x = -d;
  const double u = 1.0 / (x * x);
  return x * (1.0 + u * (2.0 + u * (-6.0 + u * (42.0 - 414.0 * u))));
}

}  // namespace

double optimal_amount(const MarketParams& market, double alpha, double t) {
  if (!(alpha > 0.0)) throw std::domain_error("optimal_amount: alpha must be > 0");
  if (!(t >= 0.0 && t <= market.T)) {
    throw std::domain_error("optimal_amount: t must lie in [0, T]");
  }
  return market.theta() / (alpha * market.sigma) * std::exp(-market.r * (market.T - t));
}

double value_function(const MarketParams& market, double alpha, double t, double x) {
  if (!(t >= 0.0 && t <= market.T)) {
    throw std::domain_error("value_function: t must lie in [0, T]");
  }
  const double tau = market.T - t;
  const double theta = market.theta();
  return -std::exp(-alpha * x * std::exp(market.r * tau) - 0.5 * theta * theta * tau);
}

double hjb_residual(const MarketParams& market, double alpha, double t, double x,
                    double dt_fd, double dx_fd) {
  return hjb_residual_of(
      [&](double tt, double xx) { return value_function(market, alpha, tt, xx); },
      market, t, x, dt_fd, dx_fd);
}

double d_lower(const MarketParams& market, double alpha, double k_lower, double t,
               double shadow_x) {
  const double tau = tau_before_maturity(market, t, "d_lower");
  return (k_lower - shadow_x * std::exp(market.r * tau)) * alpha /
         (std::sqrt(tau) * market.theta());
}

double d_upper(const MarketParams& market, double alpha, double k_upper, double t,
               double shadow_x) {
  const double tau = tau_before_maturity(market, t, "d_upper");
  return (k_upper - shadow_x * std::exp(market.r * tau)) * alpha /
         (std::sqrt(tau) * market.theta());
}

double put_price(const MarketParams& market, double alpha, double k_lower, double t,
                 double shadow_x) {
  if (t == market.T) return std::max(k_lower - shadow_x, 0.0);
  const double tau = tau_before_maturity(market, t, "put_price");
  const double d = d_lower(market, alpha, k_lower, t, shadow_x);
  const double disc = std::exp(-market.r * tau);
  return normal_cdf(d) * (disc * k_lower - shadow_x) +
         market.theta() * std::sqrt(tau) / alpha * disc * normal_pdf(d);
}

double call_price(const MarketParams& market, double alpha, double k_upper, double t,
                  double shadow_x) {
  if (t == market.T) return std::max(shadow_x - k_upper, 0.0);
  const double tau = tau_before_maturity(market, t, "call_price");
  const double d = d_upper(market, alpha, k_upper, t, shadow_x);
  const double disc = std::exp(-market.r * tau);
  return normal_cdf(-d) * (shadow_x - disc * k_upper) +
         market.theta() * std::sqrt(tau) / alpha * disc * normal_pdf(d);
}

double put_replication_fraction(const MarketParams& market, double alpha,
                                double k_lower, double t, double shadow_x) {
  const double tau = tau_before_maturity(market, t, "put_replication_fraction");
  const double d = d_lower(market, alpha, k_lower, t, shadow_x);
  return -hedge_ratio(d) / (market.sigma * std::sqrt(tau));
}

double call_replication_fraction(const MarketParams& market, double alpha,
                                 double k_upper, double t, double shadow_x) {
  const double tau = tau_before_maturity(market, t, "call_replication_fraction");
  const double d = d_upper(market, alpha, k_upper, t, shadow_x);
  return hedge_ratio(-d) / (market.sigma * std::sqrt(tau));
}

double strategy_amount(const StrategySpec& spec, const Scenario& scenario, double t,
                       double shadow_x, double wealth) {
  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  tau_before_maturity(market, t, "strategy_amount");

  double amount = optimal_amount(market, alpha, t);
  const bool wants_floor = spec.kind == StrategyKind::LowerBounded ||
                           spec.kind == StrategyKind::DoublyBounded;
  const bool wants_cap = spec.kind == StrategyKind::UpperBounded ||
                         spec.kind == StrategyKind::DoublyBounded;
  if (wants_floor) {
    if (!scenario.bounds.lower) {
      throw ValidationError("strategy_amount: kind requires a lower bound");
    }
    const double k = *scenario.bounds.lower;
    amount += put_price(market, alpha, k, t, shadow_x) *
              put_replication_fraction(market, alpha, k, t, shadow_x);
  }
  if (wants_cap) {
    if (!scenario.bounds.upper) {
      throw ValidationError("strategy_amount: kind requires an upper bound");
    }
    const double k = *scenario.bounds.upper;
    amount -= call_price(market, alpha, k, t, shadow_x) *
              call_replication_fraction(market, alpha, k, t, shadow_x);
  }

  if (spec.cap_investment && amount > wealth) return wealth;
  return amount;
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Unconstrained: return "unconstrained";
    case StrategyKind::LowerBounded: return "lower_bounded";
    case StrategyKind::UpperBounded: return "upper_bounded";
    case StrategyKind::DoublyBounded: return "doubly_bounded";
  }
  return "unknown";
}

std::optional<StrategyKind> strategy_kind_from_string(const std::string& name) {
  if (name == "unconstrained") return StrategyKind::Unconstrained;
  if (name == "lower_bounded") return StrategyKind::LowerBounded;
  if (name == "upper_bounded") return StrategyKind::UpperBounded;
  if (name == "doubly_bounded") return StrategyKind::DoublyBounded;
  return std::nullopt;
}

void validate(const Scenario& scenario) {
  const double forward = scenario.investor.x0 * std::exp(scenario.market.r * scenario.market.T);
  if (scenario.bounds.lower && !(*scenario.bounds.lower < forward)) {
    throw ValidationError("invalid bounds: the floor must lie below x0 e^{rT}");
  }
  if (scenario.bounds.upper && !(*scenario.bounds.upper >= forward)) {
    throw ValidationError("invalid bounds: the cap must lie at or above x0 e^{rT}");
  }
  if (scenario.bounds.lower && scenario.bounds.upper &&
      !(*scenario.bounds.lower < *scenario.bounds.upper)) {
    throw ValidationError("invalid bounds: the floor must lie below the cap");
  }
}

void validate(const Scenario& scenario, const StrategySpec& spec) {
  validate(scenario);
  const bool wants_floor = spec.kind == StrategyKind::LowerBounded ||
                           spec.kind == StrategyKind::DoublyBounded;
  const bool wants_cap = spec.kind == StrategyKind::UpperBounded ||
                         spec.kind == StrategyKind::DoublyBounded;
  if (wants_floor != scenario.bounds.lower.has_value()) {
    throw ValidationError(wants_floor
                              ? "strategy requires a lower bound"
                              : "lower bound present but the strategy ignores it");
  }
  if (wants_cap != scenario.bounds.upper.has_value()) {
    throw ValidationError(wants_cap
                              ? "strategy requires an upper bound"
                              : "upper bound present but the strategy ignores it");
  }
}

}  // namespace caraopt
