#include "caraopt/market.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "caraopt/gaussian.hpp"
#include "doctest.h"

using namespace caraopt;

namespace {
const MarketParams kStandard(0.01, 0.03, 0.1, 20.0);
}

TEST_CASE("market parameter validation") {
  CHECK_THROWS_AS(MarketParams(0.01, 0.03, 0.0, 20.0), ValidationError);
  CHECK_THROWS_AS(MarketParams(0.01, 0.03, -0.1, 20.0), ValidationError);
  CHECK_THROWS_AS(MarketParams(0.01, 0.03, 0.1, 0.0), ValidationError);
  CHECK_THROWS_AS(MarketParams(0.03, 0.03, 0.1, 20.0), ValidationError);
  CHECK_THROWS_AS(MarketParams(0.05, 0.03, 0.1, 20.0), ValidationError);
  // negative rates are allowed as long as mu stays above
  CHECK(MarketParams(-0.01, 0.0, 0.1, 20.0).theta() == doctest::Approx(0.1));
  CHECK(kStandard.theta() == doctest::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(InvestorParams(0.0, 100.0), ValidationError);
  CHECK_THROWS_AS(InvestorParams(0.001, 0.0), ValidationError);
}

TEST_CASE("bond price") {
  CHECK(bond_price(kStandard, 0.0) == 1.0);
  CHECK(bond_price(kStandard, 20.0) == doctest::Approx(1.2214027581601699).epsilon(1e-15));
  const MarketParams negative(-0.01, 0.01, 0.1, 20.0);
  CHECK(bond_price(negative, 20.0) == doctest::Approx(0.8187307530779818).epsilon(1e-15));
  CHECK_THROWS_AS(bond_price(kStandard, -0.1), std::domain_error);
  CHECK_THROWS_AS(bond_price(kStandard, 20.1), std::domain_error);
}

TEST_CASE("stock step closed form") {
  // an increment that zeroes the exponent leaves the price untouched
  const double dt = 0.5;
  const double dw = -(kStandard.mu - 0.5 * kStandard.sigma * kStandard.sigma) * dt /
                    kStandard.sigma;
  CHECK(stock_step(kStandard, 1.0, dt, dw) == doctest::Approx(1.0).epsilon(1e-15));
  // drift-only step
  CHECK(stock_step(kStandard, 100.0, 1.0, 0.0) ==
        doctest::Approx(100.0 * std::exp(0.025)).epsilon(1e-15));
  CHECK_THROWS_AS(stock_step(kStandard, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(stock_step(kStandard, 1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("stock terminal mean matches exp(mu T)") {
  // sample-mean oracle over one-shot draws of S(T)/S(0)
  const int n = 100000;
  GaussianStream stream(20240901, 0);
  const double sqrt_t = std::sqrt(kStandard.T);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ratio = stock_step(kStandard, 1.0, kStandard.T, sqrt_t * stream.next());
    sum += ratio;
    sum_sq += ratio * ratio;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::fabs(mean - std::exp(kStandard.mu * kStandard.T)) <= 3.0 * se);
}

TEST_CASE("discounted stock is a martingale under drift r") {
  const MarketParams risk_neutral(0.01, 0.0100001, 0.1, 20.0);
  // evaluate with mu replaced by r: reuse the exponent directly
  const int n = 100000;
  GaussianStream stream(555, 0);
  const double sqrt_t = std::sqrt(risk_neutral.T);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = stream.next();
    const double st = std::exp((risk_neutral.r - 0.005) * risk_neutral.T +
                               0.1 * sqrt_t * z);
    const double discounted = std::exp(-risk_neutral.r * risk_neutral.T) * st;
    sum += discounted;
    sum_sq += discounted * discounted;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::fabs(mean - 1.0) <= 3.0 * se);
}

TEST_CASE("utility") {
  CHECK(utility(1e-4, 0.0) == -1.0);
  CHECK(utility(1e-4, 10000.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-15));
  CHECK(utility(1e-3, 2e4) > -1e-8);  // tends to 0 from below
  CHECK(utility(1e-3, 2e4) < 0.0);
  CHECK_THROWS_AS(utility(0.0, 1.0), std::domain_error);
  // increasing and concave on a grid
  for (double x = -1000.0; x < 1000.0; x += 100.0) {
    CHECK(utility(1e-3, x) < utility(1e-3, x + 100.0));
    const double mid = 0.5 * (utility(1e-3, x) + utility(1e-3, x + 200.0));
    CHECK(utility(1e-3, x + 100.0) >= mid);
  }
}

TEST_CASE("state price density") {
  CHECK(state_price_density(kStandard, 0.0, 0.0) == 1.0);
  CHECK(state_price_density(kStandard, 20.0, 0.0) ==
        doctest::Approx(std::exp(-0.6)).epsilon(1e-15));
  GaussianStream stream(99, 3);
  for (int i = 0; i < 100; ++i) {
    CHECK(state_price_density(kStandard, 11.0, 5.0 * stream.next()) > 0.0);
  }
  CHECK_THROWS_AS(state_price_density(kStandard, -1.0, 0.0), std::domain_error);
}

TEST_CASE("budget identity E[H_T X_T] = x0 for the optimal process") {
  // Monte Carlo budget-constraint oracle; X_T and H_T share the draw of W_T.
  const double alpha = 1e-4;
  const double x0 = 1000.0;
  const double theta = kStandard.theta();
  const double t_e = kStandard.T;
  const int n = 100000;
  GaussianStream stream(424242, 0);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = std::sqrt(t_e) * stream.next();
    const double x_t = x0 * std::exp(kStandard.r * t_e) + t_e * theta * theta / alpha +
                       theta / alpha * w;
    const double v = state_price_density(kStandard, t_e, w) * x_t;
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::fabs(mean - x0) <= 3.0 * se);
}

TEST_CASE("gaussian streams are reproducible and order-independent") {
  GaussianStream a(1234, 7);
  std::vector<double> first;
  for (int i = 0; i < 64; ++i) first.push_back(a.next());

  GaussianStream b(1234, 7);
  GaussianStream interleaved(1234, 8);
  for (int i = 0; i < 64; ++i) {
    interleaved.next();  // consuming another stream must not disturb b
    CHECK(b.next() == first[i]);
  }

  GaussianStream c(1234, 8);
  GaussianStream d(4321, 7);
  bool all_equal_c = true, all_equal_d = true;
  GaussianStream a2(1234, 7);
  for (int i = 0; i < 64; ++i) {
    const double v = a2.next();
    if (c.next() != v) all_equal_c = false;
    if (d.next() != v) all_equal_d = false;
  }
  CHECK_FALSE(all_equal_c);
  CHECK_FALSE(all_equal_d);
}

TEST_CASE("gaussian stream moments are sane") {
  GaussianStream stream(8, 0);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = stream.next();
    sum += z;
    sum_sq += z * z;
  }
  CHECK(std::fabs(sum / n) <= 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.02));
}
