#include "lcaic/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lcaic/energy.hpp"

namespace lcaic {
namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ParamPath {
  enum class Kind {
    downscale_factor,
    die_area,
    cooling_multiplier,
    operating_power,
    utilization,
    defect_density,
    assembly_coefficient,
    hours_per_year,
    service_period,
  };
  Kind kind;
  int chip = -1;  // -1 for scenario-level parameters
};

std::string paths_help() {
  std::string out;
  for (const auto& p : valid_sweep_paths()) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

ParamPath parse_path(const std::string& path, int chip_count) {
  using Kind = ParamPath::Kind;
  if (path == "assembly_coefficient_kwh_per_cm2") return {Kind::assembly_coefficient, -1};
  if (path == "hours_per_year") return {Kind::hours_per_year, -1};
  if (path == "service_period_years") return {Kind::service_period, -1};

  int chip = -1;
  std::string field;
  if (path.rfind("chips[", 0) == 0) {
    const auto close = path.find(']');
    if (close != std::string::npos && close + 1 < path.size() && path[close + 1] == '.') {
      try {
        chip = std::stoi(path.substr(6, close - 6));
      } catch (const std::exception&) {
        chip = -1;
      }
      field = path.substr(close + 2);
    }
  }
  if (chip < 0 || field.empty())
    throw std::invalid_argument("unknown sweep parameter '" + path +
                                "'; valid paths: " + paths_help());
  if (chip >= chip_count)
    throw std::invalid_argument("sweep parameter '" + path + "': chip index out of range (" +
                                std::to_string(chip_count) + " chips)");

  if (field == "downscale_factor") return {Kind::downscale_factor, chip};
  if (field == "die_area_cm2") return {Kind::die_area, chip};
  if (field == "cooling_multiplier") return {Kind::cooling_multiplier, chip};
  if (field == "operating_power_w") return {Kind::operating_power, chip};
  if (field == "utilization") return {Kind::utilization, chip};
  if (field == "yield.defect_density") return {Kind::defect_density, chip};
  throw std::invalid_argument("unknown sweep parameter '" + path +
                              "'; valid paths: " + paths_help());
}

std::vector<std::string> all_columns(const Scenario& scenario) {
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < scenario.chips.size(); ++i) {
    const std::string p = "c" + std::to_string(i) + "_";
    for (const char* f : {"yield", "gross_dies", "manufacturing_kwh", "assembly_kwh",
                          "mfg_assembly_kwh", "use_kwh", "cooling_kwh",
                          "total_without_cooling_kwh", "total_kwh"})
      cols.push_back(p + f);
    if (i > 0) {
      cols.push_back(p + "improvement_without_cooling");
      cols.push_back(p + "improvement_with_cooling");
    }
  }
  return cols;
}

double column_value(const std::string& col, const std::vector<ChipAssessment>& chips,
                    const ComparisonReport* report) {
  const auto us = col.find('_');
  const std::size_t i = std::stoul(col.substr(1, us - 1));
  const std::string field = col.substr(us + 1);
  const ChipAssessment& c = chips.at(i);
  if (field == "yield") return c.yield_fraction;
  if (field == "gross_dies") return c.gross_dies;
  if (field == "manufacturing_kwh") return c.energies.manufacturing_kwh();
  if (field == "assembly_kwh") return c.energies.assembly_kwh();
  if (field == "mfg_assembly_kwh")
    return c.energies.manufacturing_kwh() + c.energies.assembly_kwh();
  if (field == "use_kwh") return c.energies.use_kwh();
  if (field == "cooling_kwh") return c.energies.cooling_kwh();
  if (field == "total_without_cooling_kwh") return c.energies.total_without_cooling_kwh();
  if (field == "total_kwh") return c.energies.total_kwh();
  if (field == "improvement_without_cooling")
    return report ? report->improvement_without_cooling[0][i] : 1.0;
  if (field == "improvement_with_cooling")
    return report ? report->improvement_with_cooling[0][i] : 1.0;
  throw std::invalid_argument("unknown sweep column '" + col + "'");
}

// One grid point, evaluated on a fresh copy of the scenario.
std::vector<ChipAssessment> evaluate_point(const Scenario& scenario, const ParamPath& param,
                                           double value) {
  using Kind = ParamPath::Kind;

  if (param.kind == Kind::downscale_factor) {
    std::vector<ChipAssessment> chips;
    for (const auto& entry : scenario.chips) chips.push_back(assess_chip(entry, scenario));
    const PhaseEnergies baseline =
        chips[param.chip == 0 ? (chips.size() > 1 ? 1 : 0) : 0].energies;
    const WhatIfResult w =
        downscale_whatif(scenario.chips[param.chip], scenario, value, baseline);
    ChipAssessment& target = chips[param.chip];
    target.die_area_cm2 = w.scaled_chip.die_area_cm2;
    target.yield_fraction = w.new_yield;
    target.gross_dies = w.new_gross_dies;
    target.energies = w.energies;
    return chips;
  }

  Scenario point = scenario;
  switch (param.kind) {
    case Kind::assembly_coefficient:
      point.assembly_coefficient_kwh_per_cm2 = value;
      break;
    case Kind::hours_per_year:
      point.hours_per_year = value;
      break;
    case Kind::service_period:
      point.service_period_years = value;
      break;
    case Kind::die_area: {
      auto& entry = point.chips[param.chip];
      // A defaulted assembly area keeps tracking the die area.
      if (entry.chip.assembly_area_cm2 &&
          *entry.chip.assembly_area_cm2 == entry.chip.die_area_cm2)
        entry.chip.assembly_area_cm2 = value;
      entry.chip.die_area_cm2 = value;
      if (entry.target_yield) {
        entry.target_yield.reset();  // density stays fixed across the sweep
      }
      break;
    }
    case Kind::cooling_multiplier:
      point.chips[param.chip].chip.cooling_multiplier = value;
      break;
    case Kind::operating_power:
      point.chips[param.chip].chip.operating_power_w = value;
      break;
    case Kind::utilization:
      point.chips[param.chip].chip.utilization = value;
      break;
    case Kind::defect_density: {
      auto& entry = point.chips[param.chip];
      entry.yield.defect_density_per_cm2 = value;
      entry.target_yield.reset();
      break;
    }
    case Kind::downscale_factor:
      break;  // handled above
  }

  auto validated = validate_scenario(point);
  if (!validated.ok())
    throw std::invalid_argument("sweep point " + fmt_full(value) +
                                " is invalid: " + format_errors(validated.errors));
  std::vector<ChipAssessment> chips;
  for (const auto& entry : validated.scenario->chips)
    chips.push_back(assess_chip(entry, *validated.scenario));
  return chips;
}

}  // namespace

std::vector<std::string> valid_sweep_paths() {
  return {"chips[N].downscale_factor", "chips[N].die_area_cm2",
          "chips[N].cooling_multiplier", "chips[N].operating_power_w",
          "chips[N].utilization",       "chips[N].yield.defect_density",
          "assembly_coefficient_kwh_per_cm2", "hours_per_year", "service_period_years"};
}

std::vector<double> make_grid(double start, double stop, int count, bool log_scale) {
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (log_scale && (!(start > 0) || !(stop > 0)))
    throw std::invalid_argument("log grid endpoints must be positive");
  std::vector<double> grid;
  grid.reserve(count);
  if (count == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    grid.push_back(log_scale ? start * std::pow(stop / start, t)
                             : start + t * (stop - start));
  }
  return grid;
}

std::string run_sweep(const Scenario& scenario, const SweepSpec& sweep) {
  if (sweep.values.empty()) throw std::invalid_argument("sweep has no grid points");
  const ParamPath param = parse_path(sweep.param_path, static_cast<int>(scenario.chips.size()));

  std::vector<std::string> columns = sweep.columns.empty() ? all_columns(scenario) : sweep.columns;
  const auto known = all_columns(scenario);
  for (const auto& col : columns) {
    if (std::find(known.begin(), known.end(), col) == known.end()) {
      std::string help;
      for (const auto& k : known) help += (help.empty() ? "" : ", ") + k;
      throw std::invalid_argument("unknown sweep column '" + col + "'; valid: " + help);
    }
  }

  std::ostringstream out;
  out << sweep.param_path;
  for (const auto& col : columns) out << ',' << col;
  out << '\n';

  for (double value : sweep.values) {
    const auto chips = evaluate_point(scenario, param, value);
    std::optional<ComparisonReport> report;
    if (chips.size() >= 2) report = compare(chips);
    out << fmt_full(value);
    for (const auto& col : columns)
      out << ',' << fmt_full(column_value(col, chips, report ? &*report : nullptr));
    out << '\n';
  }
  return out.str();
}

}  // namespace lcaic
