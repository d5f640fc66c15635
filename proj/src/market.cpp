#include "caraopt/market.hpp"

#include <cmath>
#include <stdexcept>

namespace caraopt {

namespace {
void require_time_in_horizon(const MarketParams& market, double t, const char* who) {
  if (!(t >= 0.0 && t <= market.T)) {
    throw std::domain_error(std::string(who) + ": t must lie in [0, T]");
  }
}
}  // namespace

double bond_price(const MarketParams& market, double t) {
  require_time_in_horizon(market, t, "bond_price");
  return std::exp(market.r * t);
}

double stock_step(const MarketParams& market, double s, double dt, double dw) {
  if (!(s > 0.0)) throw std::domain_error("stock_step: price must be > 0");
  if (!(dt > 0.0)) throw std::domain_error("stock_step: dt must be > 0");
  const double drift = (market.mu - 0.5 * market.sigma * market.sigma) * dt;
  return s * std::exp(drift + market.sigma * dw);
}

double utility(double alpha, double x) {
  if (!(alpha > 0.0)) throw std::domain_error("utility: alpha must be > 0");
  return -std::exp(-alpha * x);
}

double state_price_density(const MarketParams& market, double t, double w) {
  require_time_in_horizon(market, t, "state_price_density");
  const double theta = market.theta();
  return std::exp(-(market.r + 0.5 * theta * theta) * t - theta * w);
}

}  // namespace caraopt
