#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace caraopt {

/// Thrown for invalid parameters, malformed scenario files and
/// inconsistent bound/strategy combinations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the shadow-wealth root search cannot bracket a root.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Black-Scholes market: one risk-free bond and one risky stock over [0, T].
/// Rates are per year, sigma per sqrt-year. r may be zero or negative,
/// but mu must stay strictly above it so the market price of risk is positive.
struct MarketParams {
  double r;
  double mu;
  double sigma;
  double T;

  MarketParams(double r_, double mu_, double sigma_, double T_)
      : r(r_), mu(mu_), sigma(sigma_), T(T_) {
    if (!(sigma > 0.0)) throw ValidationError("MarketParams: sigma must be > 0");
    if (!(T > 0.0)) throw ValidationError("MarketParams: T must be > 0");
    if (!(mu > r)) throw ValidationError("MarketParams: mu must exceed r");
  }

  /// Market price of risk (mu - r) / sigma; strictly positive.
  double theta() const { return (mu - r) / sigma; }
};

/// Exponential-utility investor: U(x) = -exp(-alpha x) with alpha > 0.
struct InvestorParams {
  double alpha;
  double x0;

  InvestorParams(double alpha_, double x0_) : alpha(alpha_), x0(x0_) {
    if (!(alpha > 0.0)) throw ValidationError("InvestorParams: alpha must be > 0");
    if (!(x0 > 0.0)) throw ValidationError("InvestorParams: x0 must be > 0");
  }
};

/// Optional terminal-wealth floor/cap. Consistency against the forward value
/// of initial wealth is checked by validate(), not here, since it needs the
/// market and the investor.
struct Bounds {
  std::optional<double> lower;
  std::optional<double> upper;

  bool any() const { return lower.has_value() || upper.has_value(); }
};

enum class StrategyKind {
  Unconstrained,
  LowerBounded,
  UpperBounded,
  DoublyBounded,
};

/// Which strategy to run, and whether the invested amount is capped at 100%
/// of current wealth (full-stock switch below the cap).
struct StrategySpec {
  StrategyKind kind = StrategyKind::Unconstrained;
  bool cap_investment = false;
};

/// Market + investor + bounds, plus the resolved shadow initial wealth once
/// the budget equation has been solved. Without bounds the shadow value is
/// the initial wealth itself.
struct Scenario {
  MarketParams market;
  InvestorParams investor;
  Bounds bounds{};
  std::optional<double> shadow_x0{};

  bool resolved() const { return shadow_x0.has_value() || !bounds.any(); }

  double shadow() const {
    if (shadow_x0) return *shadow_x0;
    if (!bounds.any()) return investor.x0;
    throw ValidationError("Scenario: shadow value not resolved");
  }
};

/// Checks the bound placement relative to the forward value of x0:
/// lower < x0 e^{rT}, upper >= x0 e^{rT}, lower < upper.
void validate(const Scenario& scenario);

/// Additionally checks that the bounds match the strategy kind exactly
/// (a floor iff the kind hedges one, a cap iff the kind shorts one).
void validate(const Scenario& scenario, const StrategySpec& spec);

const char* to_string(StrategyKind kind);
std::optional<StrategyKind> strategy_kind_from_string(const std::string& name);

}  // namespace caraopt
