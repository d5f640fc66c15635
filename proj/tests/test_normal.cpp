#include "caraopt/normal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace caraopt;

namespace {

// Independent CDF oracle: composite Simpson over the density from -12 (where
// the tail mass is ~2e-33) up to z.
double cdf_by_quadrature(double z) {
  const double lo = -12.0;
  const int n = 40000;  // even
  const double h = (z - lo) / n;
  double sum = normal_pdf(lo) + normal_pdf(z);
  for (int i = 1; i < n; ++i) {
    sum += normal_pdf(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  }
  return sum * h / 3.0;
}

// Independent quantile oracle: Newton iteration on normal_cdf.
double quantile_by_newton(double p) {
  double x = 0.0;
  for (int k = 0; k < 80; ++k) {
    x -= (normal_cdf(x) - p) / normal_pdf(x);
  }
  return x;
}

}  // namespace

TEST_CASE("normal cdf basics") {
  CHECK(normal_cdf(0.0) == 0.5);
  for (double d = -8.0; d <= 8.0; d += 0.25) {
    CHECK(std::fabs(normal_cdf(d) + normal_cdf(-d) - 1.0) <= 1e-15);
    CHECK(normal_pdf(d) == normal_pdf(-d));
  }
  CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
}

TEST_CASE("normal cdf agrees with quadrature") {
  for (double z : {-3.0, -1.5, -0.3, 0.7, 1.0, 2.0, 4.5}) {
    CHECK(std::fabs(normal_cdf(z) - cdf_by_quadrature(z)) <= 1e-12);
  }
}

TEST_CASE("normal quantile matches the Newton oracle") {
  CHECK(std::fabs(quantile_by_newton(0.95) - 1.6448536269514722) <= 1e-13);
  CHECK(std::fabs(normal_quantile(0.95) - 1.6448536269514722) <= 1e-12);
  CHECK(std::fabs(normal_quantile(0.5)) <= 1e-15);
}

TEST_CASE("normal quantile round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(1e-12, 1.0 - 1e-12);
  for (int i = 0; i < 20000; ++i) {
    const double p = unit(rng);
    CHECK(std::fabs(normal_cdf(normal_quantile(p)) - p) <= 1e-12);
  }
  // the far tails stay finite and ordered
  CHECK(normal_quantile(1e-300) < normal_quantile(1e-16));
  CHECK(std::isfinite(normal_quantile(1e-300)));
}

TEST_CASE("normal quantile domain") {
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(-0.5), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.5), std::domain_error);
}
