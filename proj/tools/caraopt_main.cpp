// Command-line front end. Everything flows through the shared library's
// C API: load a scenario file, produce one CSV report per subcommand.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "caraopt/capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

void print_usage(std::ostream& os) {
  os << "usage: caraopt <command> --scenario <file> [options]\n"
        "\n"
        "commands:\n"
        "  shadow        solved shadow initial wealth and budget residual\n"
        "  quantiles     theoretical vs empirical terminal-wealth quantiles\n"
        "  simulate      per-path terminal wealth (plus optional extras)\n"
        "  probability   restriction-effect probabilities\n"
        "  price         t=0 prices, hedge fractions and amounts\n"
        "\n"
        "options:\n"
        "  --scenario <file>   scenario file (required)\n"
        "  --out <file>        write the CSV here instead of stdout\n"
        "  --format csv        output format (csv is the only one)\n"
        "  --dump <file>       simulate: also write one path per step\n"
        "  --dump-index <k>    which path to dump (default 0)\n"
        "  --histogram <file>  simulate: also write the terminal histogram\n";
}

struct Options {
  std::string command;
  std::string scenario;
  std::optional<std::string> out;
  std::optional<std::string> dump;
  std::optional<std::string> histogram;
  long long dump_index = 0;
};

std::optional<Options> parse_args(int argc, char** argv) {
  if (argc < 2) return std::nullopt;
  Options opts;
  opts.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string flag = argv[i];
    auto value = [&]() -> std::optional<std::string> {
      if (i + 1 >= argc) return std::nullopt;
      return std::string(argv[++i]);
    };
    if (flag == "--scenario") {
      const auto v = value();
      if (!v) return std::nullopt;
      opts.scenario = *v;
    } else if (flag == "--out") {
      const auto v = value();
      if (!v) return std::nullopt;
      opts.out = *v;
    } else if (flag == "--dump") {
      const auto v = value();
      if (!v) return std::nullopt;
      opts.dump = *v;
    } else if (flag == "--histogram") {
      const auto v = value();
      if (!v) return std::nullopt;
      opts.histogram = *v;
    } else if (flag == "--dump-index") {
      const auto v = value();
      if (!v) return std::nullopt;
      opts.dump_index = std::atoll(v->c_str());
    } else if (flag == "--format") {
      const auto v = value();
      if (!v || *v != "csv") {
        std::cerr << "caraopt: unsupported format\n";
        return std::nullopt;
      }
    } else {
      std::cerr << "caraopt: unknown option " << flag << "\n";
      return std::nullopt;
    }
  }
  if (opts.scenario.empty()) {
    std::cerr << "caraopt: --scenario is required\n";
    return std::nullopt;
  }
  return opts;
}

int exit_code_for(caraopt_status status) {
  switch (status) {
    case CARAOPT_OK: return kExitOk;
    case CARAOPT_E_VALIDATION: return kExitValidation;
    case CARAOPT_E_SOLVER: return kExitSolver;
    default: return kExitUsage;
  }
}

int write_output(const char* csv, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << csv;
    return kExitOk;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) {
    std::cerr << "caraopt: cannot write " << *path << "\n";
    return kExitUsage;
  }
  out << csv;
  return kExitOk;
}

int emit(caraopt_status status, char* csv, const std::optional<std::string>& path) {
  if (status != CARAOPT_OK) {
    std::cerr << "caraopt: " << caraopt_last_error() << "\n";
    return exit_code_for(status);
  }
  const int rc = write_output(csv, path);
  caraopt_string_free(csv);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  const auto opts = parse_args(argc, argv);
  if (!opts) {
    print_usage(std::cerr);
    return kExitUsage;
  }

  caraopt_scenario* scenario = nullptr;
  caraopt_status status = caraopt_scenario_load(opts->scenario.c_str(), &scenario);
  if (status != CARAOPT_OK) {
    std::cerr << "caraopt: " << caraopt_last_error() << "\n";
    return exit_code_for(status);
  }

  int rc = kExitUsage;
  char* csv = nullptr;
  if (opts->command == "shadow") {
    const caraopt_status st = caraopt_shadow_csv(scenario, &csv);
    rc = emit(st, csv, opts->out);
  } else if (opts->command == "quantiles") {
    const caraopt_status st = caraopt_quantiles_csv(scenario, &csv);
    rc = emit(st, csv, opts->out);
  } else if (opts->command == "probability") {
    const caraopt_status st = caraopt_probability_csv(scenario, &csv);
    rc = emit(st, csv, opts->out);
  } else if (opts->command == "price") {
    const caraopt_status st = caraopt_price_csv(scenario, &csv);
    rc = emit(st, csv, opts->out);
  } else if (opts->command == "simulate") {
    const caraopt_status st = caraopt_terminal_csv(scenario, &csv);
    rc = emit(st, csv, opts->out);
    if (rc == kExitOk && opts->dump) {
      csv = nullptr;
      const caraopt_status dump_st =
          caraopt_path_dump_csv(scenario, opts->dump_index, &csv);
      rc = emit(dump_st, csv, opts->dump);
    }
    if (rc == kExitOk && opts->histogram) {
      csv = nullptr;
      const caraopt_status hist_st = caraopt_histogram_csv(scenario, &csv);
      rc = emit(hist_st, csv, opts->histogram);
    }
  } else {
    std::cerr << "caraopt: unknown command " << opts->command << "\n";
    print_usage(std::cerr);
  }

  caraopt_scenario_free(scenario);
  return rc;
}
