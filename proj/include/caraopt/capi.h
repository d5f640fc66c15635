/*
 * C API of the caraopt shared library.
 *
 * Scenario files are loaded into opaque handles; every computation returns a
 * status code and writes its result through out-parameters. CSV results are
 * heap strings owned by the library; release them with caraopt_string_free.
 * On any non-OK status, caraopt_last_error() returns a thread-local message.
 */
#ifndef CARAOPT_CAPI_H
#define CARAOPT_CAPI_H

#include <stdint.h>

#if defined(_WIN32)
#  define CARAOPT_API __declspec(dllexport)
#else
#  define CARAOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum caraopt_status {
  CARAOPT_OK = 0,
  CARAOPT_E_VALIDATION = 2, /* bad parameters, malformed scenario, domain errors */
  CARAOPT_E_SOLVER = 3,     /* shadow-wealth root search failed */
  CARAOPT_E_INTERNAL = 5
} caraopt_status;

typedef struct caraopt_scenario_s caraopt_scenario;

CARAOPT_API uint32_t caraopt_abi_version(void);

/* Message describing the most recent failure on this thread; never NULL. */
CARAOPT_API const char* caraopt_last_error(void);

/* --- scenario handles ---------------------------------------------------- */

CARAOPT_API caraopt_status caraopt_scenario_load(const char* path,
                                                 caraopt_scenario** out);
CARAOPT_API caraopt_status caraopt_scenario_parse(const char* text,
                                                  caraopt_scenario** out);
CARAOPT_API void caraopt_scenario_free(caraopt_scenario* scenario);

/* --- CSV reports (the CLI subcommands) ----------------------------------- */

CARAOPT_API caraopt_status caraopt_shadow_csv(const caraopt_scenario*, char** out_csv);
CARAOPT_API caraopt_status caraopt_quantiles_csv(const caraopt_scenario*, char** out_csv);
CARAOPT_API caraopt_status caraopt_terminal_csv(const caraopt_scenario*, char** out_csv);
CARAOPT_API caraopt_status caraopt_path_dump_csv(const caraopt_scenario*,
                                                 int64_t path_index, char** out_csv);
CARAOPT_API caraopt_status caraopt_histogram_csv(const caraopt_scenario*, char** out_csv);
CARAOPT_API caraopt_status caraopt_probability_csv(const caraopt_scenario*, char** out_csv);
CARAOPT_API caraopt_status caraopt_price_csv(const caraopt_scenario*, char** out_csv);

CARAOPT_API void caraopt_string_free(char* s);

/* --- scalar entry points -------------------------------------------------- */

/* Optimal stock amount (theta/(alpha sigma)) e^{-r(T-t)}. */
CARAOPT_API caraopt_status caraopt_optimal_amount(double r, double mu, double sigma,
                                                  double T, double alpha, double t,
                                                  double* out);

/* Floor-put / cap-call prices on the shadow process at time t. */
CARAOPT_API caraopt_status caraopt_put_price(double r, double mu, double sigma,
                                             double T, double alpha, double k_lower,
                                             double t, double shadow_x, double* out);
CARAOPT_API caraopt_status caraopt_call_price(double r, double mu, double sigma,
                                              double T, double alpha, double k_upper,
                                              double t, double shadow_x, double* out);

/* Shadow initial wealth for optional bounds (has_* flags select them). */
CARAOPT_API caraopt_status caraopt_solve_shadow(double r, double mu, double sigma,
                                                double T, double alpha, double x0,
                                                int has_k_lower, double k_lower,
                                                int has_k_upper, double k_upper,
                                                double* out_shadow_x0,
                                                double* out_residual);

/* Cap strike offsetting the floor: 2 x0 e^{rT} - k_lower. */
CARAOPT_API caraopt_status caraopt_balanced_upper_bound(double r, double mu,
                                                        double sigma, double T,
                                                        double x0, double k_lower,
                                                        double* out);

/* Probabilities that the 100%-of-wealth restriction never/always binds. */
CARAOPT_API caraopt_status caraopt_prob_no_effect(double r, double mu, double sigma,
                                                  double T, double alpha, double x0,
                                                  double* out);
CARAOPT_API caraopt_status caraopt_prob_fully_constrained(double r, double mu,
                                                          double sigma, double T,
                                                          double alpha, double x0,
                                                          double* out);

/* Standard normal helpers. */
CARAOPT_API double caraopt_normal_cdf(double z);
CARAOPT_API double caraopt_normal_pdf(double z);
CARAOPT_API caraopt_status caraopt_normal_quantile(double p, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CARAOPT_CAPI_H */
