// Exercises the extern-C surface the way an external client would.

#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "lcaic.h"

namespace {
const std::string kDataDir = LCAIC_DATA_DIR;
}

TEST_CASE("scenario lifecycle through the C API") {
  lcaic_scenario* s = nullptr;
  REQUIRE(lcaic_scenario_load((kDataDir + "/aqfp_cmos_comparison.scn").c_str(), &s) == LCAIC_OK);
  CHECK(lcaic_scenario_chip_count(s) == 2);
  CHECK(std::string(lcaic_scenario_chip_name(s, 0)) == "CMOS RISC-V");
  CHECK(std::string(lcaic_scenario_chip_name(s, 1)) == "AQFP RISC-V");
  CHECK(lcaic_scenario_chip_name(s, 2) == nullptr);

  char* out = nullptr;
  REQUIRE(lcaic_assess_render(s, "csv", &out) == LCAIC_OK);
  CHECK(std::strstr(out, "AQFP RISC-V") != nullptr);
  lcaic_string_free(out);

  CHECK(lcaic_assess_render(s, "yaml", &out) == LCAIC_ERR_USAGE);
  CHECK(std::string(lcaic_last_error()).find("format") != std::string::npos);

  lcaic_scenario_free(s);
}

TEST_CASE("missing and invalid scenario files") {
  lcaic_scenario* s = nullptr;
  CHECK(lcaic_scenario_load((kDataDir + "/missing.scn").c_str(), &s) == LCAIC_ERR_IO);
  CHECK(s == nullptr);
  CHECK(std::string(lcaic_last_error()).find("missing.scn") != std::string::npos);
}

TEST_CASE("inventory stats through the C API") {
  lcaic_inventory* inv = nullptr;
  REQUIRE(lcaic_inventory_load((kDataDir + "/aqfp_process_inventory.csv").c_str(), &inv) ==
          LCAIC_OK);
  int steps = 0;
  double total = 0;
  REQUIRE(lcaic_inventory_stats(inv, &steps, &total) == LCAIC_OK);
  CHECK(steps == 216);
  CHECK(total == doctest::Approx(90.5).epsilon(1e-9));

  char* out = nullptr;
  REQUIRE(lcaic_materials_render(inv, "csv", &out) == LCAIC_OK);
  CHECK(std::strstr(out, "class,material,grams_per_wafer") != nullptr);
  lcaic_string_free(out);
  lcaic_inventory_free(inv);
}

TEST_CASE("yield, calibration, and geometry through the C API") {
  double y = 0;
  REQUIRE(lcaic_yield("murphy", 1.0, 1.0, &y) == LCAIC_OK);
  CHECK(y == doctest::Approx(0.39957640089372803).epsilon(1e-12));
  CHECK(lcaic_yield("voodoo", 1.0, 1.0, &y) == LCAIC_ERR_USAGE);
  CHECK(lcaic_yield("murphy", -1.0, 1.0, &y) == LCAIC_ERR_VALIDATION);

  double d = 0;
  REQUIRE(lcaic_calibrate_defect_density("murphy", 3.5, 0.852, &d) == LCAIC_OK);
  REQUIRE(lcaic_yield("murphy", 3.5, d, &y) == LCAIC_OK);
  CHECK(std::abs(y - 0.852) <= 1e-9);

  double gross_real = 0;
  long long gross = 0;
  REQUIRE(lcaic_gross_dies(300.0, 12.1, &gross_real, &gross) == LCAIC_OK);
  CHECK(gross == 5650);
  CHECK(lcaic_gross_dies(200.0, 40000.0, &gross_real, &gross) == LCAIC_ERR_VALIDATION);
}

TEST_CASE("monte carlo through the C API is seed-deterministic") {
  double a = 0, b = 0;
  REQUIRE(lcaic_monte_carlo_yield(1.0, 1.0, 100.0, 500, 7, &a) == LCAIC_OK);
  REQUIRE(lcaic_monte_carlo_yield(1.0, 1.0, 100.0, 500, 7, &b) == LCAIC_OK);
  CHECK(a == b);
}

TEST_CASE("what-if and sweep through the C API") {
  lcaic_scenario* s = nullptr;
  REQUIRE(lcaic_scenario_load((kDataDir + "/aqfp_cmos_comparison.scn").c_str(), &s) == LCAIC_OK);

  char* out = nullptr;
  REQUIRE(lcaic_whatif_render(s, 1, 2.0, 0, "csv", &out) == LCAIC_OK);
  CHECK(std::strstr(out, "AQFP RISC-V (area/2)") != nullptr);
  lcaic_string_free(out);

  CHECK(lcaic_whatif_render(s, 5, 2.0, 0, "csv", &out) == LCAIC_ERR_USAGE);
  CHECK(lcaic_whatif_render(s, 1, -2.0, 0, "csv", &out) == LCAIC_ERR_VALIDATION);

  const double values[] = {1.0, 2.0};
  REQUIRE(lcaic_sweep_render(s, "chips[1].downscale_factor", values, 2, "c1_yield", &out) ==
          LCAIC_OK);
  CHECK(std::strstr(out, "c1_yield") != nullptr);
  lcaic_string_free(out);

  CHECK(lcaic_sweep_render(s, "chips[1].nonsense", values, 2, nullptr, &out) ==
        LCAIC_ERR_USAGE);

  lcaic_scenario_free(s);
}
