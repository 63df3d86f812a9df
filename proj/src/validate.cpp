#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "lcaic/model.hpp"
#include "lcaic/yield.hpp"

namespace lcaic {
namespace {

std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

bool finite_pos(double v) { return std::isfinite(v) && v > 0; }
bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0; }

void check_chip(const ChipSpec& c, const std::string& prefix,
                std::vector<ValidationError>& errors) {
  auto bad = [&](const std::string& field, const std::string& msg, double v) {
    errors.push_back({prefix + "." + field, msg + " (got " + num(v) + ")"});
  };
  if (!finite_pos(c.operating_power_w)) bad("operating_power_w", "must be > 0", c.operating_power_w);
  if (!finite_pos(c.die_area_cm2)) bad("die_area_cm2", "must be > 0", c.die_area_cm2);
  if (!finite_pos(c.lifetime_years)) bad("lifetime_years", "must be > 0", c.lifetime_years);
  if (!finite_pos(c.clock_frequency_hz)) bad("clock_frequency_hz", "must be > 0", c.clock_frequency_hz);
  if (!(std::isfinite(c.utilization) && c.utilization >= 0 && c.utilization <= 1))
    bad("utilization", "must be in [0, 1]", c.utilization);
  if (!finite_nonneg(c.cooling_multiplier)) bad("cooling_multiplier", "must be >= 0", c.cooling_multiplier);
  if (c.assembly_area_cm2 && !finite_pos(*c.assembly_area_cm2))
    bad("assembly_area_cm2", "must be > 0 when present", *c.assembly_area_cm2);
  if (c.use_energy_override_kwh && !finite_nonneg(*c.use_energy_override_kwh))
    bad("use_energy_override_kwh", "must be >= 0 when present", *c.use_energy_override_kwh);
}

void check_inventory(const ProcessInventory& inv, const std::string& prefix,
                     std::vector<ValidationError>& errors) {
  if (inv.steps.empty()) {
    errors.push_back({prefix + ".steps", "inventory must contain at least one step"});
    return;
  }
  std::set<int> seen;
  for (std::size_t i = 0; i < inv.steps.size(); ++i) {
    const auto& step = inv.steps[i];
    const std::string p = prefix + ".steps[" + std::to_string(i) + "]";
    if (!finite_nonneg(step.energy_kwh))
      errors.push_back({p + ".energy_kwh", "must be >= 0 (got " + num(step.energy_kwh) + ")"});
    if (!seen.insert(step.index).second)
      errors.push_back({p + ".index", "duplicate step index " + std::to_string(step.index)});
    for (std::size_t j = 0; j < step.materials.size(); ++j) {
      if (!finite_nonneg(step.materials[j].mass_g))
        errors.push_back({p + ".materials[" + std::to_string(j) + "].mass_g",
                          "must be >= 0 (got " + num(step.materials[j].mass_g) + ")"});
    }
  }
}

}  // namespace

ValidatedScenario validate_scenario(const Scenario& input) {
  std::vector<ValidationError> errors;
  Scenario out = input;

  if (out.chips.empty()) errors.push_back({"chips", "scenario must contain at least one chip"});
  if (!finite_nonneg(out.assembly_coefficient_kwh_per_cm2))
    errors.push_back({"assembly_coefficient_kwh_per_cm2",
                      "must be >= 0 (got " + num(out.assembly_coefficient_kwh_per_cm2) + ")"});
  if (!finite_pos(out.hours_per_year))
    errors.push_back({"hours_per_year", "must be > 0 (got " + num(out.hours_per_year) + ")"});
  if (out.service_period_years && !finite_pos(*out.service_period_years))
    errors.push_back({"service_period_years",
                      "must be > 0 (got " + num(*out.service_period_years) + ")"});

  for (std::size_t i = 0; i < out.chips.size(); ++i) {
    auto& entry = out.chips[i];
    const std::string prefix = "chips[" + std::to_string(i) + "]";
    check_chip(entry.chip, prefix, errors);

    if (!finite_pos(entry.wafer.diameter_mm))
      errors.push_back({prefix + ".wafer.diameter_mm",
                        "must be > 0 (got " + num(entry.wafer.diameter_mm) + ")"});
    if (!finite_nonneg(entry.wafer.manufacturing_energy_kwh))
      errors.push_back({prefix + ".wafer.manufacturing_energy_kwh",
                        "must be >= 0 (got " + num(entry.wafer.manufacturing_energy_kwh) + ")"});
    if (entry.wafer.defect_density_per_cm2 && !finite_nonneg(*entry.wafer.defect_density_per_cm2))
      errors.push_back({prefix + ".wafer.defect_density_per_cm2",
                        "must be >= 0 when present (got " + num(*entry.wafer.defect_density_per_cm2) + ")"});
    if (!finite_nonneg(entry.yield.defect_density_per_cm2))
      errors.push_back({prefix + ".yield.defect_density_per_cm2",
                        "must be >= 0 (got " + num(entry.yield.defect_density_per_cm2) + ")"});
    if (entry.target_yield && !(std::isfinite(*entry.target_yield) &&
                                *entry.target_yield > 0 && *entry.target_yield <= 1))
      errors.push_back({prefix + ".yield.target_yield",
                        "must be in (0, 1] (got " + num(*entry.target_yield) + ")"});
    if (entry.inventory) check_inventory(*entry.inventory, prefix + ".inventory", errors);
  }

  if (!errors.empty()) return {std::nullopt, std::move(errors)};

  // Resolution (input is known valid from here on).
  double max_lifetime = 0;
  for (auto& entry : out.chips) {
    if (!entry.chip.assembly_area_cm2) entry.chip.assembly_area_cm2 = entry.chip.die_area_cm2;
    if (entry.inventory)
      entry.wafer.manufacturing_energy_kwh = entry.inventory->total_energy_kwh();
    if (entry.target_yield)
      entry.yield.defect_density_per_cm2 =
          calibrate_defect_density(entry.yield.variant, entry.chip.die_area_cm2, *entry.target_yield);
    entry.wafer.defect_density_per_cm2 = entry.yield.defect_density_per_cm2;
    max_lifetime = std::max(max_lifetime, entry.chip.lifetime_years);
  }
  if (!out.service_period_years) out.service_period_years = max_lifetime;

  return {std::move(out), {}};
}

}  // namespace lcaic
