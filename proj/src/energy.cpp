#include "lcaic/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "lcaic/yield.hpp"

namespace lcaic {

double wafer_manufacturing_energy_kwh(const ProcessInventory& inv) {
  return inv.total_energy_kwh();
}

double manufacturing_energy_per_die_kwh(double wafer_energy_kwh, double gross_real,
                                        double yield) {
  if (!(gross_real > 0))
    throw std::domain_error("manufacturing_energy_per_die: gross count must be > 0");
  if (!(yield > 0 && yield <= 1))
    throw std::domain_error("manufacturing_energy_per_die: yield must be in (0, 1]");
  return wafer_energy_kwh / (gross_real * yield);
}

double assembly_energy_kwh(double assembly_area_cm2, double coefficient_kwh_per_cm2) {
  if (!(assembly_area_cm2 >= 0))
    throw std::domain_error("assembly_energy: area must be >= 0");
  return assembly_area_cm2 * coefficient_kwh_per_cm2;
}

double use_phase_energy_kwh(const ChipSpec& chip, double service_years,
                            double hours_per_year) {
  if (!(service_years > 0)) throw std::domain_error("use_phase_energy: service years must be > 0");
  if (chip.use_energy_override_kwh)
    return *chip.use_energy_override_kwh * service_years / chip.lifetime_years;
  return chip.operating_power_w * service_years * hours_per_year * chip.utilization /
         kWhPerKwh;
}

double cooling_energy_kwh(double use_energy_kwh, double multiplier) {
  if (!(use_energy_kwh >= 0)) throw std::domain_error("cooling_energy: use energy must be >= 0");
  if (!(multiplier >= 0)) throw std::domain_error("cooling_energy: multiplier must be >= 0");
  return multiplier * use_energy_kwh;
}

ChipAssessment assess_chip(const ChipEntry& entry, const Scenario& scenario) {
  const ChipSpec& chip = entry.chip;
  const DieCount dies =
      gross_dies_per_wafer(entry.wafer.diameter_mm, chip.die_area_cm2 * 100.0);
  const double yield = yield_fraction(entry.yield, chip.die_area_cm2);

  double service_years = chip.lifetime_years;
  double replacements = 1.0;  // fractional under a common service period
  if (scenario.replacement_policy == ReplacementPolicy::common_service_period) {
    service_years = scenario.service_period_years.value_or(chip.lifetime_years);
    replacements = service_years / chip.lifetime_years;
  }

  const double mfg_kwh =
      manufacturing_energy_per_die_kwh(entry.wafer.manufacturing_energy_kwh,
                                       dies.gross_real, yield) *
      replacements;
  const double asm_kwh =
      assembly_energy_kwh(chip.assembly_area_cm2.value_or(chip.die_area_cm2),
                          scenario.assembly_coefficient_kwh_per_cm2) *
      replacements;
  const double use_kwh = use_phase_energy_kwh(chip, service_years, scenario.hours_per_year);
  const double cool_kwh = cooling_energy_kwh(use_kwh, chip.cooling_multiplier);

  ChipAssessment a;
  a.name = chip.name;
  a.die_area_cm2 = chip.die_area_cm2;
  a.yield_fraction = yield;
  a.gross_dies = dies.gross_real;
  a.energies.manufacturing_wh = mfg_kwh * kWhPerKwh;
  a.energies.assembly_wh = asm_kwh * kWhPerKwh;
  a.energies.use_wh = use_kwh * kWhPerKwh;
  a.energies.cooling_wh = cool_kwh * kWhPerKwh;
  return a;
}

ComparisonReport compare(const std::vector<ChipAssessment>& assessments) {
  if (assessments.size() < 2)
    throw std::invalid_argument("compare: need at least two assessments");
  for (const auto& a : assessments)
    if (!(a.energies.total_wh() > 0))
      throw std::domain_error("compare: assessment '" + a.name + "' has non-positive total");

  ComparisonReport report;
  report.chips = assessments;
  const std::size_t n = assessments.size();
  report.improvement_with_cooling.assign(n, std::vector<double>(n, 1.0));
  report.improvement_without_cooling.assign(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.improvement_with_cooling[i][j] =
          assessments[i].energies.total_wh() / assessments[j].energies.total_wh();
      report.improvement_without_cooling[i][j] =
          assessments[i].energies.total_without_cooling_wh() /
          assessments[j].energies.total_without_cooling_wh();
    }
  }
  const ChipAssessment& base = assessments[0];
  for (std::size_t i = 0; i < n; ++i) {
    ComponentRatios r;
    r.manufacturing = assessments[i].energies.manufacturing_wh / base.energies.manufacturing_wh;
    r.assembly = assessments[i].energies.assembly_wh / base.energies.assembly_wh;
    r.use = assessments[i].energies.use_wh / base.energies.use_wh;
    r.area = assessments[i].die_area_cm2 / base.die_area_cm2;
    report.ratios_vs_baseline.push_back(r);
  }
  return report;
}

ComparisonReport assess_scenario(const Scenario& scenario) {
  std::vector<ChipAssessment> assessments;
  assessments.reserve(scenario.chips.size());
  for (const auto& entry : scenario.chips) assessments.push_back(assess_chip(entry, scenario));
  if (assessments.size() == 1) {
    // Single-chip scenarios still render; the comparison is trivially self.
    ComparisonReport report;
    report.chips = assessments;
    report.improvement_with_cooling = {{1.0}};
    report.improvement_without_cooling = {{1.0}};
    report.ratios_vs_baseline = {ComponentRatios{}};
    return report;
  }
  return compare(assessments);
}

WhatIfResult downscale_whatif(const ChipEntry& entry, const Scenario& scenario,
                              double factor, const PhaseEnergies& baseline,
                              bool full_geometry) {
  if (!(factor > 0)) throw std::domain_error("downscale_whatif: factor must be > 0");

  const ChipAssessment before = assess_chip(entry, scenario);

  ChipEntry scaled = entry;
  scaled.chip.die_area_cm2 = entry.chip.die_area_cm2 / factor;
  if (entry.chip.assembly_area_cm2)
    scaled.chip.assembly_area_cm2 = *entry.chip.assembly_area_cm2 / factor;
  if (factor != 1.0) {
    char buf[48];
    std::snprintf(buf, sizeof buf, " (area/%g)", factor);
    scaled.chip.name = entry.chip.name + buf;
  }
  scaled.target_yield.reset();  // keep the already calibrated defect density

  ChipAssessment after = assess_chip(scaled, scenario);
  if (!full_geometry) {
    // Dies scale inversely with area; bypass the edge-correction re-run.
    const double gross_scaled = before.gross_dies * factor;
    double replacements = 1.0;
    if (scenario.replacement_policy == ReplacementPolicy::common_service_period)
      replacements = scenario.service_period_years.value_or(entry.chip.lifetime_years) /
                     entry.chip.lifetime_years;
    after.gross_dies = gross_scaled;
    after.energies.manufacturing_wh =
        manufacturing_energy_per_die_kwh(entry.wafer.manufacturing_energy_kwh, gross_scaled,
                                         after.yield_fraction) *
        replacements * kWhPerKwh;
  }

  WhatIfResult result;
  result.scaled_chip = scaled.chip;
  result.new_yield = after.yield_fraction;
  result.new_gross_dies = after.gross_dies;
  result.energies = after.energies;
  result.improvement_with_cooling = baseline.total_wh() / after.energies.total_wh();
  result.improvement_without_cooling =
      baseline.total_without_cooling_wh() / after.energies.total_without_cooling_wh();
  return result;
}

ChipSpec scale_to_node(const ChipSpec& chip, double from_node_nm, double to_node_nm,
                       const ScalingParams& params) {
  if (!(from_node_nm > 0) || !(to_node_nm > 0))
    throw std::domain_error("scale_to_node: node sizes must be > 0");
  const double r = to_node_nm / from_node_nm;
  ChipSpec scaled = chip;
  scaled.die_area_cm2 = chip.die_area_cm2 * std::pow(r, params.area_exponent);
  scaled.clock_frequency_hz = chip.clock_frequency_hz * std::pow(r, params.frequency_exponent);
  scaled.operating_power_w = chip.operating_power_w * std::pow(r, params.power_exponent);
  if (chip.assembly_area_cm2)
    scaled.assembly_area_cm2 = *chip.assembly_area_cm2 * std::pow(r, params.area_exponent);
  if (r != 1.0) {
    char buf[48];
    std::snprintf(buf, sizeof buf, " @%gnm", to_node_nm);
    scaled.name = chip.name + buf;
  }
  return scaled;
}

}  // namespace lcaic
