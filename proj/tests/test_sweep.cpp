#include <algorithm>
#include <stdexcept>
#include <map>
#include <sstream>

#include <doctest.h>

#include "lcaic/energy.hpp"
#include "lcaic/inventory_io.hpp"
#include "lcaic/sweep.hpp"

using namespace lcaic;

namespace {

Scenario comparison_scenario() {
  auto parsed = parse_scenario_file(std::string(LCAIC_DATA_DIR) + "/aqfp_cmos_comparison.scn");
  REQUIRE_MESSAGE(parsed.ok(), format_errors(parsed.errors));
  return *parsed.value;
}

// header + rows -> column name -> per-row values
std::map<std::string, std::vector<double>> parse_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  std::vector<std::string> headers;
  std::istringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) headers.push_back(cell);
  std::map<std::string, std::vector<double>> table;
  while (std::getline(in, line)) {
    std::istringstream rs(line);
    std::size_t col = 0;
    while (std::getline(rs, cell, ',')) table[headers.at(col++)].push_back(std::stod(cell));
  }
  return table;
}

}  // namespace

TEST_CASE("grid construction") {
  CHECK(make_grid(1, 5, 5, false) == std::vector<double>{1, 2, 3, 4, 5});
  CHECK(make_grid(7, 99, 1, false) == std::vector<double>{7});
  const auto log_grid = make_grid(1, 100, 3, true);
  CHECK(log_grid[1] == doctest::Approx(10.0));
  CHECK_THROWS_AS(make_grid(1, 10, 0, false), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-1, 10, 3, true), std::invalid_argument);
}

TEST_CASE("downscale factor sweep reproduces the what-if study") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[1].downscale_factor";
  spec.values = {1.0, 2.0};
  const auto table = parse_csv(run_sweep(s, spec));

  // f = 1 equals the plain assessment
  const auto baseline = assess_chip(s.chips[1], s);
  CHECK(table.at("c1_yield")[0] == doctest::Approx(baseline.yield_fraction).epsilon(1e-12));
  CHECK(table.at("c1_total_kwh")[0] == doctest::Approx(baseline.energies.total_kwh()).epsilon(1e-12));

  // f = 2 shows the improved yield and the shrunken energy
  CHECK(table.at("c1_yield")[1] == doctest::Approx(0.922).epsilon(0.005));
  CHECK(table.at("c1_mfg_assembly_kwh")[1] == doctest::Approx(1.34).epsilon(0.02));
}

TEST_CASE("cooling multiplier sweep is linear in the cooling column") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[1].cooling_multiplier";
  spec.values = {0.0, 400.0};
  const auto table = parse_csv(run_sweep(s, spec));

  CHECK(table.at("c1_use_kwh")[0] == table.at("c1_use_kwh")[1]);
  CHECK(table.at("c1_cooling_kwh")[0] == 0.0);
  CHECK(table.at("c1_cooling_kwh")[1] ==
        doctest::Approx(400.0 * table.at("c1_use_kwh")[1]).epsilon(1e-12));
}

TEST_CASE("sweep rows are independent of grid order") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[0].operating_power_w";
  spec.values = {1.0, 5.0, 9.0};
  const auto forward = parse_csv(run_sweep(s, spec));
  std::reverse(spec.values.begin(), spec.values.end());
  const auto backward = parse_csv(run_sweep(s, spec));
  for (const auto& [col, vals] : forward) {
    auto reversed = backward.at(col);
    std::reverse(reversed.begin(), reversed.end());
    CHECK(vals == reversed);
  }
}

TEST_CASE("defect density sweep overrides the calibration target") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[1].yield.defect_density";
  spec.values = {0.0, 0.1};
  const auto table = parse_csv(run_sweep(s, spec));
  CHECK(table.at("c1_yield")[0] == 1.0);
  CHECK(table.at("c1_yield")[1] < 1.0);
}

TEST_CASE("unknown parameter path lists the valid ones") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[0].flux_capacitance";
  spec.values = {1.0};
  try {
    run_sweep(s, spec);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("downscale_factor") != std::string::npos);
  }
}

TEST_CASE("column selection") {
  const Scenario s = comparison_scenario();
  SweepSpec spec;
  spec.param_path = "chips[1].downscale_factor";
  spec.values = {2.0};
  spec.columns = {"c1_yield", "c1_mfg_assembly_kwh"};
  const auto table = parse_csv(run_sweep(s, spec));
  CHECK(table.size() == 3);  // param column + the two requested

  spec.columns = {"c9_bogus"};
  CHECK_THROWS_AS(run_sweep(s, spec), std::invalid_argument);
}
