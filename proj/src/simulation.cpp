#include "caraopt/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "caraopt/gaussian.hpp"
#include "caraopt/market.hpp"
#include "caraopt/strategies.hpp"

namespace caraopt {

namespace {

long long grid_steps(const Scenario& scenario, const SimConfig& config) {
  if (config.sample_size < 1) {
    throw ValidationError("simulate: sample_size must be >= 1");
  }
  if (!(config.step_width > 0.0 && config.step_width <= scenario.market.T)) {
    throw ValidationError("simulate: step_width must lie in (0, T]");
  }
  const long long n = std::llround(scenario.market.T / config.step_width);
  return std::max<long long>(1, n);
}

}  // namespace

PathSet simulate(const Scenario& scenario, const StrategySpec& spec,
                 const SimConfig& config, unsigned threads) {
  validate(scenario, spec);
  const double shadow0 = scenario.shadow();  // throws when unresolved
  const long long n = grid_steps(scenario, config);
  const double h = scenario.market.T / static_cast<double>(n);

  const MarketParams& market = scenario.market;
  const double alpha = scenario.investor.alpha;
  const double theta = market.theta();
  const double bond_growth = std::exp(market.r * h);
  const double sqrt_h = std::sqrt(h);

  PathSet out;
  out.times.resize(n + 1);
  for (long long i = 0; i <= n; ++i) out.times[i] = h * static_cast<double>(i);
  out.times[n] = market.T;
  out.paths.resize(config.sample_size);

  auto run_path = [&](long long j) {
    GaussianStream stream(config.seed, static_cast<std::uint64_t>(j));
    PathRecord& rec = out.paths[j];
    rec.stock.resize(n + 1);
    rec.shadow.resize(n + 1);
    rec.invested.resize(n + 1);
    rec.wealth.resize(n + 1);

    double w = 0.0;    // Brownian value
    double s = 1.0;    // stock price, S(0) = 1
    double x = scenario.investor.x0;
    rec.stock[0] = s;
    rec.shadow[0] = shadow0;
    rec.wealth[0] = x;

    for (long long i = 0; i < n; ++i) {
      const double t = out.times[i];
      const double amount = strategy_amount(spec, scenario, t, rec.shadow[i], x);
      rec.invested[i] = amount;

      const double dw = sqrt_h * stream.next();
      w += dw;
      const double s_next = stock_step(market, s, h, dw);
      x = amount * (s_next / s) + (x - amount) * bond_growth;
      s = s_next;

      const double t_next = out.times[i + 1];
      // Exact solution of the optimal wealth SDE, evaluated on the same
      // Brownian path; no Euler error enters through the shadow process.
      rec.shadow[i + 1] = shadow0 * std::exp(market.r * t_next) +
                          std::exp(market.r * (t_next - market.T)) *
                              (t_next * theta * theta / alpha + theta / alpha * w);
      rec.stock[i + 1] = s;
      rec.wealth[i + 1] = x;
    }
    rec.invested[n] = 0.0;
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, config.sample_size));
  if (workers == 1) {
    for (long long j = 0; j < config.sample_size; ++j) run_path(j);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&, k] {
        for (long long j = k; j < config.sample_size; j += workers) run_path(j);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = p * static_cast<double>(n - 1);
  const std::size_t k = static_cast<std::size_t>(pos);
  if (k + 1 >= n) return sorted[n - 1];
  const double frac = pos - static_cast<double>(k);
  return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

}  // namespace

DistributionSummary summarize(const Scenario& scenario, const PathSet& paths,
                              std::vector<double> probabilities) {
  if (paths.paths.empty()) throw ValidationError("summarize: empty path set");
  for (double p : probabilities) {
    if (!(p > 0.0 && p < 1.0)) {
      throw ValidationError("summarize: probabilities must lie in (0, 1)");
    }
  }
  std::sort(probabilities.begin(), probabilities.end());

  const std::size_t n = paths.paths.size();
  std::vector<double> terminal(n);
  for (std::size_t j = 0; j < n; ++j) terminal[j] = paths.paths[j].wealth.back();

  DistributionSummary out;
  out.probabilities = probabilities;

  double mean = 0.0;
  for (double v : terminal) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : terminal) var += (v - mean) * (v - mean);
  out.ml_mean = mean;
  out.ml_sd = std::sqrt(var / static_cast<double>(n));

  std::vector<double> sorted = terminal;
  std::sort(sorted.begin(), sorted.end());
  out.quantiles.reserve(probabilities.size());
  for (double p : probabilities) out.quantiles.push_back(interpolated_quantile(sorted, p));

  const double lo = sorted.front();
  const double hi = sorted.back();
  std::size_t nbins = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));
  nbins = std::clamp<std::size_t>(nbins, 1, 60);
  if (hi == lo) nbins = 1;
  out.histogram.resize(nbins);
  const double width = (hi - lo) / static_cast<double>(nbins);
  for (std::size_t b = 0; b < nbins; ++b) {
    out.histogram[b].lo = lo + width * static_cast<double>(b);
    out.histogram[b].hi = (b + 1 == nbins) ? hi : lo + width * static_cast<double>(b + 1);
  }
  const double unit = 1.0 / static_cast<double>(n);
  for (double v : terminal) {
    std::size_t b = nbins == 1 || hi == lo
                        ? 0
                        : static_cast<std::size_t>((v - lo) / width);
    if (b >= nbins) b = nbins - 1;
    out.histogram[b].mass += unit;
  }

  if (scenario.bounds.any()) {
    const double kl = scenario.bounds.lower.value_or(0.0);
    const double ku = scenario.bounds.upper.value_or(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double target = paths.paths[j].shadow.back();
      if (scenario.bounds.lower) target = std::max(target, kl);
      if (scenario.bounds.upper) target = std::min(target, ku);
      out.mass_band = std::max(out.mass_band, std::fabs(terminal[j] - target));
    }
    auto fraction_near = [&](double k, double band) {
      std::size_t count = 0;
      for (double v : terminal) {
        if (std::fabs(v - k) <= band) ++count;
      }
      return static_cast<double>(count) / static_cast<double>(n);
    };
    if (scenario.bounds.lower) {
      const double tight = 1e-6 * std::max(1.0, std::fabs(kl));
      out.floor_fraction_tight = fraction_near(kl, tight);
      out.floor_fraction = fraction_near(kl, tight + out.mass_band);
    }
    if (scenario.bounds.upper) {
      const double tight = 1e-6 * std::max(1.0, std::fabs(ku));
      out.cap_fraction_tight = fraction_near(ku, tight);
      out.cap_fraction = fraction_near(ku, tight + out.mass_band);
    }
  }
  return out;
}

std::vector<QuantileDeviation> deviation_report(const DistributionSummary& summary,
                                                const TerminalLaw& law,
                                                const std::vector<double>& probabilities) {
  if (probabilities.size() != summary.probabilities.size()) {
    throw ValidationError("deviation_report: probability lists disagree");
  }
  std::vector<QuantileDeviation> out(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    QuantileDeviation& row = out[i];
    row.probability = summary.probabilities[i];
    row.theoretical = quantile(law, row.probability);
    row.empirical = summary.quantiles[i];
    if (std::fabs(row.theoretical) > 1e-12 * std::max(1.0, std::fabs(row.empirical))) {
      row.deviation = (row.empirical - row.theoretical) / row.theoretical;
      row.valid = true;
    } else {
      row.deviation = std::numeric_limits<double>::quiet_NaN();
      row.valid = false;
    }
  }
  return out;
}

}  // namespace caraopt
