#pragma once

#include <optional>

#include "caraopt/types.hpp"

namespace caraopt {

/// Law of terminal wealth for a (possibly bounded) optimal strategy: normal
/// with mean shadow_x0 e^{rT} + T theta^2 / alpha and sd theta sqrt(T) / alpha
/// strictly between the bounds, plus point masses sitting on them.
struct TerminalLaw {
  double mean = 0.0;
  double sd = 0.0;
  std::optional<double> lower;
  std::optional<double> upper;
  double mass_lower = 0.0;  ///< probability of finishing exactly on the floor
  double mass_upper = 0.0;  ///< probability of finishing exactly on the cap

  /// CDF: 0 below the floor, shadow normal CDF in between, 1 from the cap on.
  double cdf(double x) const;
};

/// Law for the scenario's strategy; requires a resolved shadow value when
/// bounds are present.
TerminalLaw terminal_law(const Scenario& scenario);

/// Left-continuous p-quantile: the interior normal quantile clamped to the
/// bounds, so it equals the floor for p <= mass_lower and the cap for
/// p >= 1 - mass_upper. p must lie in (0, 1).
double quantile(const TerminalLaw& law, double p);

/// Constant by which introducing bounds moves every unclamped quantile:
/// (shadow_x0 - x0) e^{rT}. Both scenarios must share market and investor
/// parameters; p is validated but does not enter the value.
double quantile_shift(const Scenario& constrained, const Scenario& unconstrained,
                      double p);

}  // namespace caraopt
