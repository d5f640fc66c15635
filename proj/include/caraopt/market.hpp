#pragma once

#include "caraopt/types.hpp"

namespace caraopt {

/// Bond price e^{r t}; B(0) = 1. t must lie in [0, T].
double bond_price(const MarketParams& market, double t);

/// Exact log-normal stock update over dt given the Brownian increment dW:
/// s * exp((mu - sigma^2/2) dt + sigma dW). Requires s > 0 and dt > 0.
double stock_step(const MarketParams& market, double s, double dt, double dw);

/// Exponential utility -e^{-alpha x}.
double utility(double alpha, double x);

/// State price density H(t) = exp(-(r + theta^2/2) t - theta w) for a
/// Brownian value w at time t in [0, T]; H(0) = 1.
double state_price_density(const MarketParams& market, double t, double w);

}  // namespace caraopt
