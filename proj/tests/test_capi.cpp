#include "caraopt/capi.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"

namespace {

const char* kScenario = R"([market]
r = 0.01
mu = 0.03
sigma = 0.1
T = 20

[investor]
alpha = 0.0001
x0 = 1000

[bounds]
k_lower = 1000

[strategy]
kind = lower_bounded

[sim]
s = 40
h = 0.5
seed = 7
)";

struct ScenarioHandle {
  caraopt_scenario* ptr = nullptr;
  ~ScenarioHandle() { caraopt_scenario_free(ptr); }
};

std::string take(char* csv) {
  REQUIRE(csv != nullptr);
  std::string out = csv;
  caraopt_string_free(csv);
  return out;
}

}  // namespace

TEST_CASE("scenario parse and reports through the C API") {
  ScenarioHandle handle;
  REQUIRE(caraopt_scenario_parse(kScenario, &handle.ptr) == CARAOPT_OK);

  char* csv = nullptr;
  REQUIRE(caraopt_shadow_csv(handle.ptr, &csv) == CARAOPT_OK);
  const std::string shadow = take(csv);
  CHECK(shadow.rfind("shadow_x0,residual,iterations\n", 0) == 0);
  CHECK(std::fabs(std::stod(shadow.substr(shadow.find('\n') + 1)) -
                  (-10701.4076578935)) <= 1e-3);

  csv = nullptr;
  REQUIRE(caraopt_price_csv(handle.ptr, &csv) == CARAOPT_OK);
  const std::string price = take(csv);
  CHECK(price.find("put_price_t0,") != std::string::npos);
  CHECK(price.find("call_price_t0,") == std::string::npos);

  csv = nullptr;
  REQUIRE(caraopt_quantiles_csv(handle.ptr, &csv) == CARAOPT_OK);
  CHECK(take(csv).rfind("p,theoretical,empirical,deviation\n", 0) == 0);

  csv = nullptr;
  REQUIRE(caraopt_terminal_csv(handle.ptr, &csv) == CARAOPT_OK);
  const std::string terminal = take(csv);
  // header plus one line per path
  CHECK(std::count(terminal.begin(), terminal.end(), '\n') == 41);

  csv = nullptr;
  REQUIRE(caraopt_path_dump_csv(handle.ptr, 0, &csv) == CARAOPT_OK);
  const std::string dump = take(csv);
  CHECK(dump.rfind("t,stock,shadow,invested,wealth\n", 0) == 0);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 42);  // header + 41 grid dates

  csv = nullptr;
  REQUIRE(caraopt_histogram_csv(handle.ptr, &csv) == CARAOPT_OK);
  CHECK(take(csv).rfind("bin_low,bin_high,mass\n", 0) == 0);

  csv = nullptr;
  CHECK(caraopt_path_dump_csv(handle.ptr, 40, &csv) == CARAOPT_E_VALIDATION);
  CHECK(std::strlen(caraopt_last_error()) > 0);
}

TEST_CASE("C API propagates validation failures") {
  caraopt_scenario* raw = nullptr;
  CHECK(caraopt_scenario_parse("[market]\nr = nonsense\n", &raw) ==
        CARAOPT_E_VALIDATION);
  CHECK(raw == nullptr);
  CHECK(std::strlen(caraopt_last_error()) > 0);
  CHECK(caraopt_scenario_load("/no/such/file.scn", &raw) == CARAOPT_E_VALIDATION);
  CHECK(caraopt_scenario_parse(nullptr, &raw) == CARAOPT_E_VALIDATION);
}

TEST_CASE("scalar C entry points agree with the core") {
  double value = 0.0;
  REQUIRE(caraopt_optimal_amount(0.01, 0.03, 0.1, 20.0, 1e-4, 0.0, &value) == CARAOPT_OK);
  CHECK(value == doctest::Approx(16374.6150615596).epsilon(1e-12));

  REQUIRE(caraopt_put_price(0.01, 0.03, 0.1, 20.0, 1e-4, 800.0, 0.0,
                            800.0 * std::exp(-0.2), &value) == CARAOPT_OK);
  CHECK(value == doctest::Approx(2921.4345624047).epsilon(1e-10));

  double shadow = 0.0, residual = 1.0;
  REQUIRE(caraopt_solve_shadow(0.01, 0.03, 0.2, 20.0, 1e-4, 1000.0, 1, 0.0, 1, 1500.0,
                               &shadow, &residual) == CARAOPT_OK);
  CHECK(shadow == doctest::Approx(3901.7764285351).epsilon(1e-7));
  CHECK(std::fabs(residual) <= 1e-6);
  // invalid bounds surface as a validation status
  CHECK(caraopt_solve_shadow(0.01, 0.03, 0.1, 20.0, 1e-4, 1000.0, 1, 5000.0, 0, 0.0,
                             &shadow, &residual) == CARAOPT_E_VALIDATION);

  REQUIRE(caraopt_balanced_upper_bound(0.01, 0.03, 0.2, 20.0, 1000.0, 0.0, &value) ==
          CARAOPT_OK);
  CHECK(std::fabs(value - 2442.8) <= 0.1);

  REQUIRE(caraopt_prob_no_effect(0.01, 0.04, 0.1, 20.0, 1e-3,
                                 3000.0 * std::exp(-0.2), &value) == CARAOPT_OK);
  CHECK(std::fabs(value - 0.0154) <= 0.0005);
  REQUIRE(caraopt_prob_fully_constrained(0.01, 0.04, 0.1, 20.0, 1e-3,
                                         3000.0 * std::exp(-0.2), &value) == CARAOPT_OK);
  CHECK(std::fabs(value - 0.1037) <= 0.0005);

  CHECK(caraopt_normal_cdf(0.0) == 0.5);
  REQUIRE(caraopt_normal_quantile(0.95, &value) == CARAOPT_OK);
  CHECK(value == doctest::Approx(1.6448536269514722).epsilon(1e-12));
  CHECK(caraopt_normal_quantile(1.0, &value) == CARAOPT_E_VALIDATION);

  CHECK(caraopt_optimal_amount(0.01, 0.03, 0.1, 20.0, 1e-4, 0.0, nullptr) ==
        CARAOPT_E_VALIDATION);
  CHECK(caraopt_abi_version() == 1);
}
