#pragma once

#include <cstdint>
#include <vector>

#include "caraopt/distribution.hpp"
#include "caraopt/types.hpp"

namespace caraopt {

struct SimConfig {
  long long sample_size = 0;
  double step_width = 0.0;  ///< rebalancing interval in years
  std::uint64_t seed = 0;
};

/// One simulated trajectory on the rebalancing grid. invested[i] is the
/// amount held over [t_i, t_{i+1}); the entry at T is 0 (nothing left to
/// rebalance).
struct PathRecord {
  std::vector<double> stock;
  std::vector<double> shadow;
  std::vector<double> invested;
  std::vector<double> wealth;
};

struct PathSet {
  std::vector<double> times;  ///< shared grid {0, h, ..., T}
  std::vector<PathRecord> paths;
};

/// Runs sample_size discretely rebalanced paths of the given strategy.
/// T / step_width is rounded to an integer number of steps. The shadow
/// process follows its exact solution on the shared Brownian path; the
/// wealth is self-financing with amounts fixed at the left endpoint of each
/// step. Output is a pure function of (scenario, spec, config): per-path
/// substreams are keyed by path index, so any thread count produces
/// bit-identical results. threads == 0 picks the hardware concurrency.
PathSet simulate(const Scenario& scenario, const StrategySpec& spec,
                 const SimConfig& config, unsigned threads = 0);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;
};

struct DistributionSummary {
  std::vector<double> probabilities;
  std::vector<double> quantiles;  ///< empirical, linear interpolation between order statistics
  double ml_mean = 0.0;           ///< maximum-likelihood normal fit: sample mean
  double ml_sd = 0.0;             ///< and biased (1/n) standard deviation
  std::vector<HistogramBin> histogram;

  /// Largest per-path gap |X_T - clamp(shadow_T, floor, cap)|; measures the
  /// rebalancing discretisation. 0 without bounds.
  double mass_band = 0.0;
  /// Fraction of paths within mass_band (plus a 1e-6 relative margin) of the
  /// floor / cap, and within the tight margin alone.
  double floor_fraction = 0.0;
  double cap_fraction = 0.0;
  double floor_fraction_tight = 0.0;
  double cap_fraction_tight = 0.0;
};

/// Terminal-wealth summary of a path set at the requested probabilities.
DistributionSummary summarize(const Scenario& scenario, const PathSet& paths,
                              std::vector<double> probabilities);

struct QuantileDeviation {
  double probability = 0.0;
  double theoretical = 0.0;
  double empirical = 0.0;
  double deviation = 0.0;  ///< (empirical - theoretical) / theoretical
  bool valid = false;      ///< false when the theoretical quantile is ~0
};

/// Signed relative deviations of empirical from theoretical quantiles.
std::vector<QuantileDeviation> deviation_report(const DistributionSummary& summary,
                                                const TerminalLaw& law,
                                                const std::vector<double>& probabilities);

}  // namespace caraopt
