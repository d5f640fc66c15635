#pragma once

#include <cmath>
#include <utility>

#include "caraopt/types.hpp"

namespace caraopt {

/// Amount held in the stock by the unconstrained optimal strategy at time t:
/// (theta / (alpha sigma)) e^{-r(T-t)}. Deterministic and wealth-independent.
double optimal_amount(const MarketParams& market, double alpha, double t);

/// Optimal value function V(t, x) = -exp(-alpha x e^{r(T-t)} - theta^2/2 (T-t)).
/// V(T, x) equals the utility of x.
double value_function(const MarketParams& market, double alpha, double t, double x);

/// Central-difference residual of the controlled Bellman PDE
///   V_t + r x V_x - (theta^2/2) V_x^2 / V_xx
/// applied to an arbitrary function v(t, x). Second-order accurate in the step
/// sizes; the closed-form value function drives it to zero.
template <class F>
double hjb_residual_of(F&& v, const MarketParams& market, double t, double x,
                       double dt_fd, double dx_fd) {
  if (!(dt_fd > 0.0 && dx_fd > 0.0)) {
    throw std::domain_error("hjb_residual: step sizes must be > 0");
  }
  if (!(t - dt_fd > 0.0 && t + dt_fd < market.T)) {
    throw std::domain_error("hjb_residual: t +/- dt_fd must stay inside (0, T)");
  }
  const double v0 = v(t, x);
  const double vt = (v(t + dt_fd, x) - v(t - dt_fd, x)) / (2.0 * dt_fd);
  const double vxp = v(t, x + dx_fd);
  const double vxm = v(t, x - dx_fd);
  const double vx = (vxp - vxm) / (2.0 * dx_fd);
  const double vxx = (vxp - 2.0 * v0 + vxm) / (dx_fd * dx_fd);
  const double theta = market.theta();
  return vt + market.r * x * vx - 0.5 * theta * theta * vx * vx / vxx;
}

/// hjb_residual_of applied to the closed-form value function.
double hjb_residual(const MarketParams& market, double alpha, double t, double x,
                    double dt_fd, double dx_fd);

/// Standardised moneyness of the floor option:
/// d_l = (k_lower - x e^{r(T-t)}) alpha / (sqrt(T-t) theta). Requires t < T.
double d_lower(const MarketParams& market, double alpha, double k_lower, double t,
               double shadow_x);

/// Same form with the cap strike.
double d_upper(const MarketParams& market, double alpha, double k_upper, double t,
               double shadow_x);

/// Price of the floor put on the shadow process,
///   p = Phi(d_l)(e^{-r(T-t)} k_l - x) + (theta sqrt(T-t)/alpha) e^{-r(T-t)} phi(d_l);
/// at t == T returns the payoff max(k_l - x, 0).
double put_price(const MarketParams& market, double alpha, double k_lower, double t,
                 double shadow_x);

/// Price of the cap call on the shadow process; at t == T returns
/// max(x - k_u, 0).
double call_price(const MarketParams& market, double alpha, double k_upper, double t,
                  double shadow_x);

/// Fraction of the put's value held in stock by its replicating portfolio:
/// -Phi(d) / (sigma sqrt(T-t) (Phi(d) d + phi(d))). Undefined at t == T.
double put_replication_fraction(const MarketParams& market, double alpha,
                                double k_lower, double t, double shadow_x);

/// Call counterpart, Phi(-d) / (sigma sqrt(T-t)(phi(d) - Phi(-d) d)).
double call_replication_fraction(const MarketParams& market, double alpha,
                                 double k_upper, double t, double shadow_x);

/// Currency amount the requested strategy invests in the stock at time t,
/// given the current shadow value and current wealth. The floor adds the put
/// hedge, the cap shorts the call hedge, and with cap_investment the raw
/// amount is limited to 100% of wealth. t must lie in [0, T).
double strategy_amount(const StrategySpec& spec, const Scenario& scenario, double t,
                       double shadow_x, double wealth);

}  // namespace caraopt
