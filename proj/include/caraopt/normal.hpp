#pragma once

namespace caraopt {

/// Standard normal CDF, erf-based; absolute error below 1e-14 over the
/// whole double range.
double normal_cdf(double z);

/// Standard normal density.
double normal_pdf(double z);

/// Inverse of normal_cdf on (0, 1). Rational initial guess polished with one
/// Halley step; |normal_cdf(normal_quantile(p)) - p| <= 1e-12.
/// Throws std::domain_error outside (0, 1).
double normal_quantile(double p);

}  // namespace caraopt
