#include "caraopt/capi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "caraopt/analytics.hpp"
#include "caraopt/normal.hpp"
#include "caraopt/report.hpp"
#include "caraopt/scenario_file.hpp"
#include "caraopt/shadow.hpp"
#include "caraopt/strategies.hpp"

struct caraopt_scenario_s {
  caraopt::LoadedScenario loaded;
};

namespace {

thread_local std::string g_last_error = "ok";

caraopt_status fail(caraopt_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <class Fn>
caraopt_status guarded(Fn&& fn) {
  try {
    fn();
    return CARAOPT_OK;
  } catch (const caraopt::SolverError& e) {
    return fail(CARAOPT_E_SOLVER, e.what());
  } catch (const caraopt::ValidationError& e) {
    return fail(CARAOPT_E_VALIDATION, e.what());
  } catch (const std::domain_error& e) {
    return fail(CARAOPT_E_VALIDATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CARAOPT_E_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CARAOPT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CARAOPT_E_INTERNAL, e.what());
  } catch (...) {
    return fail(CARAOPT_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

caraopt_status require(bool ok, const char* message) {
  return ok ? CARAOPT_OK : fail(CARAOPT_E_VALIDATION, message);
}

template <class Producer>
caraopt_status csv_report(const caraopt_scenario* scenario, char** out_csv,
                          Producer&& produce) {
  if (require(scenario && out_csv, "null argument") != CARAOPT_OK) {
    return CARAOPT_E_VALIDATION;
  }
  *out_csv = nullptr;
  return guarded([&] { *out_csv = dup_string(produce(scenario->loaded)); });
}

}  // namespace

extern "C" {

uint32_t caraopt_abi_version(void) { return 1; }

const char* caraopt_last_error(void) { return g_last_error.c_str(); }

caraopt_status caraopt_scenario_load(const char* path, caraopt_scenario** out) {
  if (require(path && out, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  *out = nullptr;
  return guarded([&] {
    auto* handle = new caraopt_scenario_s{caraopt::load_scenario_file(path)};
    *out = handle;
  });
}

caraopt_status caraopt_scenario_parse(const char* text, caraopt_scenario** out) {
  if (require(text && out, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  *out = nullptr;
  return guarded([&] {
    auto* handle = new caraopt_scenario_s{caraopt::parse_scenario_text(text)};
    *out = handle;
  });
}

void caraopt_scenario_free(caraopt_scenario* scenario) { delete scenario; }

caraopt_status caraopt_shadow_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv, [](const auto& ls) { return caraopt::shadow_csv(ls); });
}

caraopt_status caraopt_quantiles_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv, [](const auto& ls) { return caraopt::quantiles_csv(ls); });
}

caraopt_status caraopt_terminal_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv, [](const auto& ls) { return caraopt::terminal_csv(ls); });
}

caraopt_status caraopt_path_dump_csv(const caraopt_scenario* s, int64_t path_index,
                                     char** out_csv) {
  return csv_report(s, out_csv, [path_index](const auto& ls) {
    return caraopt::path_dump_csv(ls, path_index);
  });
}

caraopt_status caraopt_histogram_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv, [](const auto& ls) { return caraopt::histogram_csv(ls); });
}

caraopt_status caraopt_probability_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv,
                    [](const auto& ls) { return caraopt::probability_csv(ls); });
}

caraopt_status caraopt_price_csv(const caraopt_scenario* s, char** out_csv) {
  return csv_report(s, out_csv, [](const auto& ls) { return caraopt::price_csv(ls); });
}

void caraopt_string_free(char* s) { std::free(s); }

caraopt_status caraopt_optimal_amount(double r, double mu, double sigma, double T,
                                      double alpha, double t, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::optimal_amount(caraopt::MarketParams(r, mu, sigma, T), alpha, t);
  });
}

caraopt_status caraopt_put_price(double r, double mu, double sigma, double T,
                                 double alpha, double k_lower, double t,
                                 double shadow_x, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::put_price(caraopt::MarketParams(r, mu, sigma, T), alpha, k_lower, t,
                              shadow_x);
  });
}

caraopt_status caraopt_call_price(double r, double mu, double sigma, double T,
                                  double alpha, double k_upper, double t,
                                  double shadow_x, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::call_price(caraopt::MarketParams(r, mu, sigma, T), alpha, k_upper, t,
                               shadow_x);
  });
}

caraopt_status caraopt_solve_shadow(double r, double mu, double sigma, double T,
                                    double alpha, double x0, int has_k_lower,
                                    double k_lower, int has_k_upper, double k_upper,
                                    double* out_shadow_x0, double* out_residual) {
  if (require(out_shadow_x0 != nullptr, "null argument") != CARAOPT_OK) {
    return CARAOPT_E_VALIDATION;
  }
  return guarded([&] {
    caraopt::Scenario scenario{caraopt::MarketParams(r, mu, sigma, T),
                               caraopt::InvestorParams(alpha, x0)};
    if (has_k_lower) scenario.bounds.lower = k_lower;
    if (has_k_upper) scenario.bounds.upper = k_upper;
    caraopt::validate(scenario);
    const caraopt::ShadowSolution sol = caraopt::solve_shadow(scenario);
    *out_shadow_x0 = sol.shadow_x0;
    if (out_residual) *out_residual = sol.residual;
  });
}

caraopt_status caraopt_balanced_upper_bound(double r, double mu, double sigma, double T,
                                            double x0, double k_lower, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::balanced_upper_bound(x0, caraopt::MarketParams(r, mu, sigma, T),
                                         k_lower);
  });
}

caraopt_status caraopt_prob_no_effect(double r, double mu, double sigma, double T,
                                      double alpha, double x0, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::prob_no_effect(caraopt::MarketParams(r, mu, sigma, T), alpha, x0);
  });
}

caraopt_status caraopt_prob_fully_constrained(double r, double mu, double sigma,
                                              double T, double alpha, double x0,
                                              double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] {
    *out = caraopt::prob_fully_constrained(caraopt::MarketParams(r, mu, sigma, T), alpha,
                                           x0);
  });
}

double caraopt_normal_cdf(double z) { return caraopt::normal_cdf(z); }

double caraopt_normal_pdf(double z) { return caraopt::normal_pdf(z); }

caraopt_status caraopt_normal_quantile(double p, double* out) {
  if (require(out != nullptr, "null argument") != CARAOPT_OK) return CARAOPT_E_VALIDATION;
  return guarded([&] { *out = caraopt::normal_quantile(p); });
}

}  // extern "C"
