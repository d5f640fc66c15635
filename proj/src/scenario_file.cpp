#include "caraopt/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace caraopt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view raw, const std::string& where) {
  const std::string_view s = trim(raw);
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    const double num = parse_real(s.substr(0, slash), where);
    const double den = parse_real(s.substr(slash + 1), where);
    if (den == 0.0) throw ValidationError(where + ": division by zero");
    return num / den;
  }
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ValidationError(where + ": not a number: '" + std::string(s) + "'");
  }
  return value;
}

bool parse_bool(std::string_view raw, const std::string& where) {
  const std::string_view s = trim(raw);
  if (s == "true") return true;
  if (s == "false") return false;
  throw ValidationError(where + ": expected true or false");
}

using Section = std::map<std::string, std::string>;

struct ParsedFile {
  std::map<std::string, Section> sections;
};

ParsedFile split_sections(std::string_view text) {
  static const char* known[] = {"market", "investor", "bounds", "strategy", "sim"};
  ParsedFile out;
  std::string current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string at = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(at + ": malformed section header");
      const std::string name{trim(line.substr(1, line.size() - 2))};
      if (std::find(std::begin(known), std::end(known), name) == std::end(known)) {
        throw ValidationError(at + ": unknown section [" + name + "]");
      }
      if (out.sections.count(name)) {
        throw ValidationError(at + ": duplicate section [" + name + "]");
      }
      out.sections[name];
      current = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(at + ": expected key = value");
    }
    if (current.empty()) throw ValidationError(at + ": key outside any section");
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty()) throw ValidationError(at + ": empty key");
    if (!out.sections[current].emplace(key, value).second) {
      throw ValidationError(at + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

class SectionReader {
 public:
  SectionReader(const ParsedFile& file, const std::string& name, bool required)
      : name_(name) {
    const auto it = file.sections.find(name);
    if (it == file.sections.end()) {
      if (required) throw ValidationError("missing section [" + name + "]");
      present_ = false;
    } else {
      section_ = &it->second;
    }
  }

  bool present() const { return present_; }

  std::string require(const std::string& key) {
    if (!present_) throw ValidationError("missing section [" + name_ + "]");
    const auto it = section_->find(key);
    if (it == section_->end()) {
      throw ValidationError("[" + name_ + "]: missing key '" + key + "'");
    }
    seen_.push_back(key);
    return it->second;
  }

  std::optional<std::string> optional(const std::string& key) {
    if (!present_) return std::nullopt;
    const auto it = section_->find(key);
    if (it == section_->end()) return std::nullopt;
    seen_.push_back(key);
    return it->second;
  }

  void reject_unknown() const {
    if (!present_) return;
    for (const auto& [key, value] : *section_) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        throw ValidationError("[" + name_ + "]: unknown key '" + key + "'");
      }
    }
  }

 private:
  std::string name_;
  const Section* section_ = nullptr;
  bool present_ = true;
  std::vector<std::string> seen_;
};

std::vector<double> parse_probabilities(std::string_view raw) {
  std::vector<double> probs;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    const std::size_t comma = raw.find(',', pos);
    const std::string_view item =
        raw.substr(pos, comma == std::string_view::npos ? raw.size() - pos : comma - pos);
    probs.push_back(parse_real(item, "[sim] probabilities"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (double p : probs) {
    if (!(p > 0.0 && p < 1.0)) {
      throw ValidationError("[sim] probabilities must lie in (0, 1)");
    }
  }
  std::sort(probs.begin(), probs.end());
  return probs;
}

}  // namespace

LoadedScenario parse_scenario_text(std::string_view text) {
  const ParsedFile file = split_sections(text);

  SectionReader market(file, "market", true);
  const double r = parse_real(market.require("r"), "[market] r");
  const double mu = parse_real(market.require("mu"), "[market] mu");
  const double sigma = parse_real(market.require("sigma"), "[market] sigma");
  const double T = parse_real(market.require("T"), "[market] T");
  market.reject_unknown();

  SectionReader investor(file, "investor", true);
  const double alpha = parse_real(investor.require("alpha"), "[investor] alpha");
  const double x0 = parse_real(investor.require("x0"), "[investor] x0");
  investor.reject_unknown();

  Bounds bounds;
  SectionReader bsec(file, "bounds", false);
  if (bsec.present()) {
    if (const auto v = bsec.optional("k_lower")) {
      bounds.lower = parse_real(*v, "[bounds] k_lower");
    }
    if (const auto v = bsec.optional("k_upper")) {
      bounds.upper = parse_real(*v, "[bounds] k_upper");
    }
    bsec.reject_unknown();
    if (!bounds.any()) throw ValidationError("[bounds]: section present but empty");
  }

  SectionReader strat(file, "strategy", true);
  const std::string kind_name = strat.require("kind");
  const auto kind = strategy_kind_from_string(kind_name);
  if (!kind) throw ValidationError("[strategy] kind: unknown value '" + kind_name + "'");
  StrategySpec spec;
  spec.kind = *kind;
  if (const auto v = strat.optional("cap_investment")) {
    spec.cap_investment = parse_bool(*v, "[strategy] cap_investment");
  }
  strat.reject_unknown();

  SectionReader sim(file, "sim", true);
  SimConfig config;
  const double s_raw = parse_real(sim.require("s"), "[sim] s");
  if (!(s_raw >= 1.0) || s_raw != std::floor(s_raw)) {
    throw ValidationError("[sim] s must be a positive integer");
  }
  config.sample_size = static_cast<long long>(s_raw);
  config.step_width = parse_real(sim.require("h"), "[sim] h");
  {
    // All randomness flows from this one value; wall-clock seeding would make
    // the golden outputs meaningless.
    const std::string seed_raw = sim.require("seed");
    std::uint64_t seed = 0;
    const auto sv = trim(seed_raw);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), seed);
    if (ec != std::errc{} || ptr != sv.data() + sv.size()) {
      throw ValidationError("[sim] seed must be an unsigned 64-bit integer");
    }
    config.seed = seed;
  }
  std::vector<double> probabilities = {0.25, 0.5, 0.75, 0.95};
  if (const auto v = sim.optional("probabilities")) probabilities = parse_probabilities(*v);
  sim.reject_unknown();

  LoadedScenario out{
      Scenario{MarketParams(r, mu, sigma, T), InvestorParams(alpha, x0), bounds},
      spec, config, std::move(probabilities)};
  if (!(out.sim.step_width > 0.0 && out.sim.step_width <= T)) {
    throw ValidationError("[sim] h must lie in (0, T]");
  }
  validate(out.scenario, out.strategy);
  return out;
}

LoadedScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

}  // namespace caraopt
