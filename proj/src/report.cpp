#include "caraopt/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "caraopt/analytics.hpp"
#include "caraopt/distribution.hpp"
#include "caraopt/shadow.hpp"
#include "caraopt/strategies.hpp"

namespace caraopt {

std::string format_double(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

namespace {

Scenario resolved_scenario(const LoadedScenario& ls) {
  Scenario scenario = ls.scenario;
  resolve_shadow(scenario);
  return scenario;
}

void append_row(std::string& csv, const std::string& label, double value) {
  csv += label;
  csv += ',';
  csv += format_double(value);
  csv += '\n';
}

}  // namespace

std::string shadow_csv(const LoadedScenario& ls) {
  Scenario scenario = ls.scenario;
  const ShadowSolution sol = resolve_shadow(scenario);
  std::string csv = "shadow_x0,residual,iterations\n";
  csv += format_double(sol.shadow_x0);
  csv += ',';
  csv += format_double(sol.residual);
  csv += ',';
  csv += std::to_string(sol.iterations);
  csv += '\n';
  return csv;
}

std::string quantiles_csv(const LoadedScenario& ls) {
  const Scenario scenario = resolved_scenario(ls);
  const TerminalLaw law = terminal_law(scenario);
  const PathSet paths = simulate(scenario, ls.strategy, ls.sim);
  const DistributionSummary summary = summarize(scenario, paths, ls.probabilities);
  const auto rows = deviation_report(summary, law, summary.probabilities);

  std::string csv = "p,theoretical,empirical,deviation\n";
  for (const QuantileDeviation& row : rows) {
    csv += format_double(row.probability);
    csv += ',';
    csv += format_double(row.theoretical);
    csv += ',';
    csv += format_double(row.empirical);
    csv += ',';
    csv += row.valid ? format_double(row.deviation) : "nan";
    csv += '\n';
  }
  return csv;
}

std::string terminal_csv(const LoadedScenario& ls) {
  const Scenario scenario = resolved_scenario(ls);
  const PathSet paths = simulate(scenario, ls.strategy, ls.sim);
  std::string csv = "path,terminal_wealth\n";
  for (std::size_t j = 0; j < paths.paths.size(); ++j) {
    csv += std::to_string(j);
    csv += ',';
    csv += format_double(paths.paths[j].wealth.back());
    csv += '\n';
  }
  return csv;
}

std::string path_dump_csv(const LoadedScenario& ls, long long path_index) {
  if (path_index < 0 || path_index >= ls.sim.sample_size) {
    throw ValidationError("path dump: path index out of range");
  }
  const Scenario scenario = resolved_scenario(ls);
  const PathSet paths = simulate(scenario, ls.strategy, ls.sim);
  const PathRecord& rec = paths.paths[static_cast<std::size_t>(path_index)];
  std::string csv = "t,stock,shadow,invested,wealth\n";
  for (std::size_t i = 0; i < paths.times.size(); ++i) {
    csv += format_double(paths.times[i]);
    csv += ',';
    csv += format_double(rec.stock[i]);
    csv += ',';
    csv += format_double(rec.shadow[i]);
    csv += ',';
    csv += format_double(rec.invested[i]);
    csv += ',';
    csv += format_double(rec.wealth[i]);
    csv += '\n';
  }
  return csv;
}

std::string histogram_csv(const LoadedScenario& ls) {
  const Scenario scenario = resolved_scenario(ls);
  const PathSet paths = simulate(scenario, ls.strategy, ls.sim);
  const DistributionSummary summary = summarize(scenario, paths, ls.probabilities);
  std::string csv = "bin_low,bin_high,mass\n";
  for (const HistogramBin& bin : summary.histogram) {
    csv += format_double(bin.lo);
    csv += ',';
    csv += format_double(bin.hi);
    csv += ',';
    csv += format_double(bin.mass);
    csv += '\n';
  }
  return csv;
}

std::string probability_csv(const LoadedScenario& ls) {
  const MarketParams& market = ls.scenario.market;
  const double alpha = ls.scenario.investor.alpha;
  const double x0 = ls.scenario.investor.x0;

  std::string csv = "metric,value\n";
  append_row(csv, "theta", market.theta());
  append_row(csv, "optimal_amount_t0", optimal_amount(market, alpha, 0.0));
  const double nan = std::nan("");
  double no_effect = nan;
  double fully = nan;
  try {
    no_effect = prob_no_effect(market, alpha, x0);
  } catch (const std::domain_error&) {
  }
  try {
    fully = prob_fully_constrained(market, alpha, x0);
  } catch (const std::domain_error&) {
  }
  append_row(csv, "p_no_effect", no_effect);
  append_row(csv, "p_fully_constrained", fully);
  return csv;
}

std::string price_csv(const LoadedScenario& ls) {
  const Scenario scenario = resolved_scenario(ls);
  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  const double shadow = scenario.shadow();

  std::string csv = "quantity,value\n";
  append_row(csv, "theta", market.theta());
  append_row(csv, "shadow_x0", shadow);
  append_row(csv, "optimal_amount_t0", optimal_amount(market, alpha, 0.0));
  if (scenario.bounds.lower) {
    const double k = *scenario.bounds.lower;
    append_row(csv, "put_d0", d_lower(market, alpha, k, 0.0, shadow));
    append_row(csv, "put_price_t0", put_price(market, alpha, k, 0.0, shadow));
    append_row(csv, "put_fraction_t0",
               put_replication_fraction(market, alpha, k, 0.0, shadow));
  }
  if (scenario.bounds.upper) {
    const double k = *scenario.bounds.upper;
    append_row(csv, "call_d0", d_upper(market, alpha, k, 0.0, shadow));
    append_row(csv, "call_price_t0", call_price(market, alpha, k, 0.0, shadow));
    append_row(csv, "call_fraction_t0",
               call_replication_fraction(market, alpha, k, 0.0, shadow));
  }
  append_row(csv, "strategy_amount_t0",
             strategy_amount(ls.strategy, scenario, 0.0, shadow,
                             scenario.investor.x0));
  return csv;
}

}  // namespace caraopt
