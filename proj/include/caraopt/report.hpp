#pragma once

#include <string>

#include "caraopt/scenario_file.hpp"

namespace caraopt {

/// CSV producers behind the CLI subcommands. Columns are fixed, decimals use
/// '.', lines end in LF and doubles print with shortest round-trip digits,
/// so a pinned seed regenerates files byte-identically.

/// "shadow_x0,residual,iterations" - the solved budget equation.
std::string shadow_csv(const LoadedScenario& ls);

/// "p,theoretical,empirical,deviation" - law quantiles of the (uncapped)
/// strategy against empirical quantiles of the simulated one.
std::string quantiles_csv(const LoadedScenario& ls);

/// "path,terminal_wealth" - per-path terminal wealth.
std::string terminal_csv(const LoadedScenario& ls);

/// "t,stock,shadow,invested,wealth" - one path on the rebalancing grid.
std::string path_dump_csv(const LoadedScenario& ls, long long path_index);

/// "bin_low,bin_high,mass" - terminal-wealth histogram; masses sum to 1.
std::string histogram_csv(const LoadedScenario& ls);

/// "metric,value" - restriction-effect probabilities for the scenario.
std::string probability_csv(const LoadedScenario& ls);

/// "quantity,value" - t=0 prices, replication fractions and amounts at the
/// resolved shadow value.
std::string price_csv(const LoadedScenario& ls);

/// Shortest round-trip decimal formatting used by every report.
std::string format_double(double v);

}  // namespace caraopt
