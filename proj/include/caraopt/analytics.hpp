#pragma once

#include <optional>
#include <span>
#include <vector>

#include "caraopt/types.hpp"

namespace caraopt {

/// Per-year factors and products for the two extreme outcomes of the
/// 100%-of-wealth investment restriction, iterated over unit time steps.
struct RestrictionProbabilities {
  double p_no_effect = 0.0;          ///< restriction never binds
  double p_fully_constrained = 0.0;  ///< wealth never climbs back above the raw amount
  std::vector<double> factors_no_effect;
  std::vector<double> factors_fully_constrained;
};

/// Raw factor products with no precondition on x0 (diagnostics). T must be a
/// whole number of years >= 2.
RestrictionProbabilities restriction_probabilities(const MarketParams& market,
                                                   double alpha, double x0);

/// Probability that the restriction never binds,
///   prod_{t=0}^{T-2} Phi((C_t + theta)/sqrt(t+1)),
///   C_t = (alpha/theta) x0 e^{rT} + theta t - 1/sigma.
/// Requires x0 at or above the initial optimal amount.
double prob_no_effect(const MarketParams& market, double alpha, double x0);

/// Probability that the wealth stays below the raw optimal amount throughout,
///   prod_{t=0}^{T-2} Phi(A_t / (sigma sqrt(t+1))),
///   A_t = ln(theta/(sigma alpha x0)) - r(T-t-1) + (mu - sigma^2/2)(t+1).
/// Requires x0 at or below the initial optimal amount.
double prob_fully_constrained(const MarketParams& market, double alpha, double x0);

struct LimitDiagnosticsRow {
  double theta = 0.0;
  double x0 = 0.0;
  double p_no_effect = 0.0;
  double p_fully_constrained = 0.0;
};

/// Tabulates both raw probabilities along a market grid so limit trends can
/// be inspected. With no explicit x0 each row is evaluated at that market's
/// initial optimal amount (the boundary where both formulas apply).
std::vector<LimitDiagnosticsRow> limit_diagnostics(std::span<const MarketParams> markets,
                                                   double alpha,
                                                   std::optional<double> x0 = {});

}  // namespace caraopt
