#pragma once

// Core domain types for the life-cycle energy and inventory engine.
// All types are immutable value types after validation; energies are
// carried internally in watt-hours and rendered as kWh at the edges.

#include <optional>
#include <string>
#include <vector>

namespace lcaic {

constexpr double kWhPerKwh = 1000.0;
constexpr double kDefaultAssemblyCoefficientKwhPerCm2 = 0.34;
constexpr double kDefaultHoursPerYear = 8766.0;  // Julian year

enum class StepCategory {
  deposition,
  lithography,
  etch,
  implant_or_anneal,
  clean,
  metrology,
  other,
};

const char* to_string(StepCategory c);
std::optional<StepCategory> step_category_from_string(const std::string& s);

enum class YieldModel { murphy, poisson, seeds };

const char* to_string(YieldModel m);
std::optional<YieldModel> yield_model_from_string(const std::string& s);

enum class ReplacementPolicy { per_device, common_service_period };

const char* to_string(ReplacementPolicy p);
std::optional<ReplacementPolicy> replacement_policy_from_string(const std::string& s);

// One technology's functional unit.
struct ChipSpec {
  std::string name;
  double clock_frequency_hz = 0;
  double operating_power_w = 0;  // power drawn at operating temperature
  double die_area_cm2 = 0;
  double lifetime_years = 0;
  double utilization = 1.0;          // duty fraction in [0,1]
  double cooling_multiplier = 0;     // 0 for room-temperature technology
  std::optional<double> assembly_area_cm2;      // defaults to die_area
  std::optional<double> use_energy_override_kwh;  // replaces computed use phase
};

struct WaferSpec {
  double diameter_mm = 0;
  double manufacturing_energy_kwh = 0;  // given directly or recomputed from inventory
  std::optional<double> defect_density_per_cm2;
};

struct MaterialFlow {
  std::string material;
  double mass_g = 0;  // grams per wafer
  std::string material_class;  // gas, chemical, water, metal, other
};

bool is_known_material_class(const std::string& s);

struct ProcessStep {
  int index = 0;  // unique within an inventory
  std::string name;
  StepCategory category = StepCategory::other;
  double energy_kwh = 0;  // per wafer
  std::vector<MaterialFlow> materials;
};

struct ProcessInventory {
  std::string technology_name;
  std::vector<ProcessStep> steps;

  // The total is always recomputed, never stored.
  double total_energy_kwh() const;
};

struct YieldModelSpec {
  YieldModel variant = YieldModel::murphy;
  double defect_density_per_cm2 = 0;
};

struct ScalingParams {
  double area_exponent = 2.0;
  double frequency_exponent = -1.0;
  double power_exponent = 2.0;
};

// Per-die energies for one chip. Internally watt-hours.
struct PhaseEnergies {
  double manufacturing_wh = 0;
  double assembly_wh = 0;
  double use_wh = 0;
  double cooling_wh = 0;

  double total_wh() const { return manufacturing_wh + assembly_wh + use_wh + cooling_wh; }
  double total_without_cooling_wh() const { return manufacturing_wh + assembly_wh + use_wh; }

  double manufacturing_kwh() const { return manufacturing_wh / kWhPerKwh; }
  double assembly_kwh() const { return assembly_wh / kWhPerKwh; }
  double use_kwh() const { return use_wh / kWhPerKwh; }
  double cooling_kwh() const { return cooling_wh / kWhPerKwh; }
  double total_kwh() const { return total_wh() / kWhPerKwh; }
  double total_without_cooling_kwh() const { return total_without_cooling_wh() / kWhPerKwh; }
};

// One assessed technology within a scenario.
struct ChipEntry {
  ChipSpec chip;
  WaferSpec wafer;
  std::optional<ProcessInventory> inventory;
  YieldModelSpec yield;
  // When set, defect density is calibrated against this yield at load time.
  std::optional<double> target_yield;
};

struct Scenario {
  std::vector<ChipEntry> chips;
  std::optional<double> service_period_years;  // defaults to max chip lifetime
  ReplacementPolicy replacement_policy = ReplacementPolicy::per_device;
  double assembly_coefficient_kwh_per_cm2 = kDefaultAssemblyCoefficientKwhPerCm2;
  double hours_per_year = kDefaultHoursPerYear;
};

struct ChipAssessment {
  std::string name;
  double die_area_cm2 = 0;
  double yield_fraction = 0;
  double gross_dies = 0;  // analytic, pre-floor
  PhaseEnergies energies;
};

struct ComponentRatios {
  double manufacturing = 1;
  double assembly = 1;
  double use = 1;
  double area = 1;
};

struct ComparisonReport {
  std::vector<ChipAssessment> chips;
  // factor[i][j] = total(i) / total(j); baseline row / candidate column
  std::vector<std::vector<double>> improvement_with_cooling;
  std::vector<std::vector<double>> improvement_without_cooling;
  // per chip, relative to chips[0]
  std::vector<ComponentRatios> ratios_vs_baseline;
};

struct WhatIfResult {
  ChipSpec scaled_chip;
  double new_yield = 0;
  double new_gross_dies = 0;
  PhaseEnergies energies;
  double improvement_with_cooling = 0;     // baseline total / scaled total
  double improvement_without_cooling = 0;
};

// A validation problem, with a dotted field path and a human-readable message.
struct ValidationError {
  std::string path;
  std::string message;
};

std::string format_errors(const std::vector<ValidationError>& errors);

// Resolves defaults (assembly_area <- die_area, service_period <- max lifetime,
// wafer energy <- inventory total, defect density <- calibrated target yield)
// and reports every invariant violation, not just the first.
// Exactly one of {resolved scenario, non-empty error list} is produced.
struct ValidatedScenario {
  std::optional<Scenario> scenario;
  std::vector<ValidationError> errors;

  bool ok() const { return scenario.has_value(); }
};

ValidatedScenario validate_scenario(const Scenario& input);

}  // namespace lcaic
