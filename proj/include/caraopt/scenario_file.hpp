#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "caraopt/simulation.hpp"
#include "caraopt/types.hpp"

namespace caraopt {

/// A parsed scenario file: market, investor, optional bounds, strategy and
/// simulation settings. The shadow value is not resolved yet.
struct LoadedScenario {
  Scenario scenario;
  StrategySpec strategy;
  SimConfig sim;
  std::vector<double> probabilities;
};

/// Parses the sectioned key = value scenario format:
///
///   [market]          r, mu, sigma, T
///   [investor]        alpha, x0
///   [bounds]          k_lower and/or k_upper (section optional)
///   [strategy]        kind, cap_investment (optional, default false)
///   [sim]             s, h, seed, probabilities (optional)
///
/// '#' starts a comment; numbers may be written as plain reals or as
/// fractions like 1/49. Unknown sections or keys, missing required keys,
/// bounds inconsistent with the strategy kind and an absent seed are all
/// rejected with ValidationError.
LoadedScenario parse_scenario_text(std::string_view text);

/// parse_scenario_text on a file's contents; throws ValidationError when the
/// file cannot be read.
LoadedScenario load_scenario_file(const std::string& path);

}  // namespace caraopt
