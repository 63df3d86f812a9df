#include <cmath>
#include <stdexcept>
#include <random>

#include <doctest.h>

#include "lcaic/energy.hpp"
#include "lcaic/inventory_io.hpp"
#include "lcaic/yield.hpp"

using namespace lcaic;

namespace {

Scenario load_comparison_scenario() {
  auto parsed = parse_scenario_file(std::string(LCAIC_DATA_DIR) + "/aqfp_cmos_comparison.scn");
  REQUIRE_MESSAGE(parsed.ok(), format_errors(parsed.errors));
  return *parsed.value;
}

}  // namespace

TEST_CASE("wafer manufacturing energy is the exact step sum") {
  ProcessInventory inv;
  int i = 0;
  for (double e : {1.0, 2.5, 0.5}) {
    ProcessStep s;
    s.index = ++i;
    s.name = "s";
    s.energy_kwh = e;
    inv.steps.push_back(s);
  }
  CHECK(wafer_manufacturing_energy_kwh(inv) == 4.0);
}

TEST_CASE("manufacturing energy per die") {
  CHECK(manufacturing_energy_per_die_kwh(937.4, 5650.2, 0.976) ==
        doctest::Approx(0.170).epsilon(0.005));
  CHECK(manufacturing_energy_per_die_kwh(90.5, 66.0, 0.852) ==
        doctest::Approx(1.609).epsilon(0.001));
  CHECK(manufacturing_energy_per_die_kwh(0.0, 100.0, 0.9) == 0.0);
  CHECK_THROWS_AS(manufacturing_energy_per_die_kwh(10.0, 100.0, 0.0), std::domain_error);
}

TEST_CASE("assembly energy") {
  CHECK(assembly_energy_kwh(3.5, 0.34) == doctest::Approx(1.19).epsilon(1e-12));
  CHECK(assembly_energy_kwh(0.2353, 0.34) == doctest::Approx(0.080).epsilon(0.001));
  CHECK(assembly_energy_kwh(0.0, 0.34) == 0.0);
}

TEST_CASE("use phase energy") {
  ChipSpec cmos;
  cmos.operating_power_w = 7.5;
  cmos.lifetime_years = 10;
  CHECK(use_phase_energy_kwh(cmos, 10, 8766) == doctest::Approx(657.45).epsilon(1e-9));

  ChipSpec aqfp;
  aqfp.operating_power_w = 41e-6;
  aqfp.lifetime_years = 10;
  CHECK(use_phase_energy_kwh(aqfp, 10, 8766) == doctest::Approx(0.0035940599999).epsilon(1e-9));

  // override replaces the computed value, scaled by service / lifetime
  aqfp.use_energy_override_kwh = 0.00105;
  CHECK(use_phase_energy_kwh(aqfp, 10, 8766) == doctest::Approx(0.00105));
  CHECK(use_phase_energy_kwh(aqfp, 5, 8766) == doctest::Approx(0.000525));

  CHECK_THROWS_AS(use_phase_energy_kwh(cmos, 0.0, 8766), std::domain_error);
}

TEST_CASE("cooling energy") {
  CHECK(cooling_energy_kwh(0.00105, 400) == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(cooling_energy_kwh(123.0, 0) == 0.0);
  CHECK(cooling_energy_kwh(1.0, 400) == 400.0);
}

TEST_CASE("phase operations are linear (property)") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.1, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), k = u(rng);
    CHECK(manufacturing_energy_per_die_kwh(k * x, 50.0, 0.9) ==
          doctest::Approx(k * manufacturing_energy_per_die_kwh(x, 50.0, 0.9)).epsilon(1e-12));
    CHECK(assembly_energy_kwh(k * x, 0.34) ==
          doctest::Approx(k * assembly_energy_kwh(x, 0.34)).epsilon(1e-12));
    CHECK(cooling_energy_kwh(k * x, 400) ==
          doctest::Approx(k * cooling_energy_kwh(x, 400)).epsilon(1e-12));
  }
}

TEST_CASE("amortization identity (property)") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> wafer(1.0, 2000.0);
  std::uniform_real_distribution<double> gross(10.0, 10000.0);
  std::uniform_real_distribution<double> yield(0.05, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double w = wafer(rng), g = gross(rng), y = yield(rng);
    const double per_die = manufacturing_energy_per_die_kwh(w, g, y);
    CHECK(per_die * functional_dies(g, y) == doctest::Approx(w).epsilon(1e-9));
  }
}

TEST_CASE("shipped comparison scenario reproduces the published rows") {
  const Scenario s = load_comparison_scenario();
  REQUIRE(s.chips.size() == 2);
  CHECK(s.service_period_years == 10.0);

  const auto cmos = assess_chip(s.chips[0], s);
  const auto aqfp = assess_chip(s.chips[1], s);

  CHECK(cmos.energies.manufacturing_kwh() == doctest::Approx(0.17).epsilon(0.02));
  CHECK(cmos.energies.assembly_kwh() == doctest::Approx(0.08).epsilon(0.02));
  CHECK(cmos.energies.use_kwh() == doctest::Approx(665.23).epsilon(1e-9));
  CHECK(cmos.energies.total_kwh() == doctest::Approx(665.48).epsilon(0.0001));

  CHECK(aqfp.energies.manufacturing_kwh() == doctest::Approx(1.61).epsilon(0.02));
  CHECK(aqfp.energies.assembly_kwh() == doctest::Approx(1.19).epsilon(0.02));
  CHECK(aqfp.energies.use_kwh() == doctest::Approx(0.00105).epsilon(1e-9));
  CHECK(aqfp.energies.cooling_kwh() == doctest::Approx(0.42).epsilon(0.02));
  CHECK(aqfp.energies.total_kwh() == doctest::Approx(3.23).epsilon(0.02));

  const auto report = compare({cmos, aqfp});
  CHECK(report.improvement_without_cooling[0][1] == doctest::Approx(237.0).epsilon(0.02));
  CHECK(report.improvement_with_cooling[0][1] == doctest::Approx(205.0).epsilon(0.02));
  CHECK(report.ratios_vs_baseline[1].manufacturing == doctest::Approx(9.5).epsilon(0.01));
  CHECK(report.ratios_vs_baseline[1].assembly == doctest::Approx(14.8).epsilon(0.01));
  CHECK(report.ratios_vs_baseline[1].area == doctest::Approx(28.9).epsilon(0.01));
}

TEST_CASE("zero-power chip with zero-energy wafer assesses to zero") {
  Scenario s;
  ChipEntry e;
  e.chip.name = "null";
  e.chip.clock_frequency_hz = 1e6;
  e.chip.operating_power_w = 1e-30;  // strictly positive per the invariants
  e.chip.die_area_cm2 = 1.0;
  e.chip.lifetime_years = 1;
  e.chip.utilization = 0.0;
  e.wafer.diameter_mm = 300;
  e.wafer.manufacturing_energy_kwh = 0;
  s.chips.push_back(e);
  const auto v = validate_scenario(s);
  REQUIRE(v.ok());
  s.assembly_coefficient_kwh_per_cm2 = 0;
  const auto a = assess_chip(v.scenario->chips[0], s);
  CHECK(a.energies.manufacturing_kwh() == 0.0);
  CHECK(a.energies.assembly_kwh() == 0.0);
  CHECK(a.energies.use_kwh() == 0.0);
  CHECK(a.energies.cooling_kwh() == 0.0);
}

TEST_CASE("compare rejects degenerate input and is antisymmetric") {
  const Scenario s = load_comparison_scenario();
  const auto cmos = assess_chip(s.chips[0], s);
  CHECK_THROWS_AS(compare({cmos}), std::invalid_argument);

  // self-comparison factor is exactly 1
  const auto self = compare({cmos, cmos});
  CHECK(self.improvement_with_cooling[0][1] == 1.0);

  const auto aqfp = assess_chip(s.chips[1], s);
  const auto r = compare({cmos, aqfp});
  CHECK(r.improvement_with_cooling[0][1] * r.improvement_with_cooling[1][0] ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.improvement_without_cooling[0][1] * r.improvement_without_cooling[1][0] ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("downscale what-if") {
  const Scenario s = load_comparison_scenario();
  const auto cmos = assess_chip(s.chips[0], s);
  const auto aqfp = assess_chip(s.chips[1], s);

  SUBCASE("factor 1 is the identity") {
    const auto w = downscale_whatif(s.chips[1], s, 1.0, cmos.energies);
    CHECK(w.new_yield == aqfp.yield_fraction);
    CHECK(w.energies.manufacturing_wh == doctest::Approx(aqfp.energies.manufacturing_wh).epsilon(1e-12));
    CHECK(w.energies.total_wh() == doctest::Approx(aqfp.energies.total_wh()).epsilon(1e-12));
  }

  SUBCASE("factor 2 matches the published downscaling study") {
    const auto w = downscale_whatif(s.chips[1], s, 2.0, cmos.energies);
    CHECK(w.new_yield > 0.917);
    CHECK(w.new_yield < 0.926);
    CHECK(w.energies.manufacturing_kwh() + w.energies.assembly_kwh() ==
          doctest::Approx(1.34).epsilon(0.01));
    CHECK(w.improvement_without_cooling == doctest::Approx(497.0).epsilon(0.02));
    CHECK(w.improvement_with_cooling == doctest::Approx(378.0).epsilon(0.02));
  }

  SUBCASE("full geometry mode re-runs the edge correction") {
    const auto w = downscale_whatif(s.chips[1], s, 2.0, cmos.energies, true);
    // edge losses shrink with the die, so more dies than pure area scaling
    CHECK(w.new_gross_dies > 2.0 * aqfp.gross_dies);
  }

  SUBCASE("f then 1/f round-trips in full-geometry mode") {
    // Pure area scaling is relative to each entry's own edge-corrected die
    // count, so only the full geometry re-run is exactly self-inverse.
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> factors(0.3, 4.0);
    for (int i = 0; i < 50; ++i) {
      const double f = factors(rng);
      const auto once = downscale_whatif(s.chips[1], s, f, cmos.energies, true);
      ChipEntry scaled_entry = s.chips[1];
      scaled_entry.chip = once.scaled_chip;
      scaled_entry.target_yield.reset();
      const auto back = downscale_whatif(scaled_entry, s, 1.0 / f, cmos.energies, true);
      CHECK(back.energies.total_wh() ==
            doctest::Approx(aqfp.energies.total_wh()).epsilon(1e-6));
      CHECK(back.new_yield == doctest::Approx(aqfp.yield_fraction).epsilon(1e-9));
    }
  }

  SUBCASE("downscaling with fixed density always raises yield") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> factors(1.0 + 1e-6, 10.0);
    for (int i = 0; i < 100; ++i) {
      const auto w = downscale_whatif(s.chips[1], s, factors(rng), cmos.energies);
      CHECK(w.new_yield > aqfp.yield_fraction);
    }
  }

  SUBCASE("non-positive factor is a domain error") {
    CHECK_THROWS_AS(downscale_whatif(s.chips[1], s, -1.0, cmos.energies), std::domain_error);
    CHECK_THROWS_AS(downscale_whatif(s.chips[1], s, 0.0, cmos.energies), std::domain_error);
  }
}

TEST_CASE("node scaling") {
  ChipSpec chip;
  chip.name = "c";
  chip.clock_frequency_hz = 1e9;
  chip.operating_power_w = 7.5;
  chip.die_area_cm2 = 0.121;
  chip.lifetime_years = 5;

  SUBCASE("same node is the identity") {
    const auto same = scale_to_node(chip, 130, 130);
    CHECK(same.die_area_cm2 == chip.die_area_cm2);
    CHECK(same.clock_frequency_hz == chip.clock_frequency_hz);
    CHECK(same.name == chip.name);
  }

  SUBCASE("doubling the node with default exponents") {
    const auto scaled = scale_to_node(chip, 130, 260);
    CHECK(scaled.die_area_cm2 == doctest::Approx(4 * chip.die_area_cm2).epsilon(1e-12));
    CHECK(scaled.clock_frequency_hz == doctest::Approx(0.5 * chip.clock_frequency_hz).epsilon(1e-12));
    CHECK(scaled.operating_power_w == doctest::Approx(4 * chip.operating_power_w).epsilon(1e-12));
  }

  SUBCASE("round trip for arbitrary exponents (property)") {
    std::mt19937 rng(10);
    std::uniform_real_distribution<double> exp(-3.0, 3.0);
    std::uniform_real_distribution<double> node(10.0, 500.0);
    for (int i = 0; i < 200; ++i) {
      ScalingParams p{exp(rng), exp(rng), exp(rng)};
      const double a = node(rng), b = node(rng);
      const auto back = scale_to_node(scale_to_node(chip, a, b, p), b, a, p);
      CHECK(back.die_area_cm2 == doctest::Approx(chip.die_area_cm2).epsilon(1e-9));
      CHECK(back.clock_frequency_hz == doctest::Approx(chip.clock_frequency_hz).epsilon(1e-9));
      CHECK(back.operating_power_w == doctest::Approx(chip.operating_power_w).epsilon(1e-9));
    }
  }

  SUBCASE("non-positive nodes are rejected") {
    CHECK_THROWS_AS(scale_to_node(chip, 0, 130), std::domain_error);
    CHECK_THROWS_AS(scale_to_node(chip, 130, -5), std::domain_error);
  }
}

TEST_CASE("common service period scales fractional replacements") {
  Scenario s = load_comparison_scenario();
  s.replacement_policy = ReplacementPolicy::common_service_period;
  s.service_period_years = 10;

  const auto per_device = [&] {
    Scenario t = s;
    t.replacement_policy = ReplacementPolicy::per_device;
    return assess_chip(t.chips[0], t);
  }();
  const auto common = assess_chip(s.chips[0], s);

  // CMOS lifetime is 5 years: two fractional device generations in 10 years
  CHECK(common.energies.manufacturing_wh ==
        doctest::Approx(2 * per_device.energies.manufacturing_wh).epsilon(1e-12));
  CHECK(common.energies.assembly_wh ==
        doctest::Approx(2 * per_device.energies.assembly_wh).epsilon(1e-12));
  CHECK(common.energies.use_wh ==
        doctest::Approx(2 * per_device.energies.use_wh).epsilon(1e-12));
}
