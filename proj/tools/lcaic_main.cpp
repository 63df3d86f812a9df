// lcaic — command-line front end for the assessment engine. Talks to the
// engine exclusively through the C API in lcaic.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcaic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

int exit_code_for(lcaic_status status) {
  switch (status) {
    case LCAIC_OK: return kExitOk;
    case LCAIC_ERR_USAGE: return kExitUsage;
    case LCAIC_ERR_VALIDATION:
    case LCAIC_ERR_IO: return kExitValidation;
  }
  return kExitValidation;
}

int report_error(lcaic_status status) {
  std::cerr << "error: " << lcaic_last_error() << '\n';
  return exit_code_for(status);
}

// RAII wrappers over the opaque handles.
struct Scenario {
  lcaic_scenario* handle = nullptr;
  ~Scenario() { lcaic_scenario_free(handle); }
};

struct Inventory {
  lcaic_inventory* handle = nullptr;
  ~Inventory() { lcaic_inventory_free(handle); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { lcaic_string_free(s); }
};

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write to " << out_path << '\n';
    return kExitValidation;
  }
  out << text;
  return kExitOk;
}

bool parse_values_list(const std::string& list, std::vector<double>& out) {
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

// START:STOP:COUNT[:log]
bool parse_grid_spec(const std::string& spec, std::vector<double>& out) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4) return false;
  bool log_scale = false;
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") return false;
    log_scale = parts[3] == "log";
  }
  double start, stop;
  long count;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    return false;
  }
  if (count < 1) return false;
  if (log_scale && (start <= 0 || stop <= 0)) return false;
  for (long i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(log_scale ? start * std::pow(stop / start, t) : start + t * (stop - start));
  }
  return true;
}

std::string ratios_block(const std::string& assess_json) {
  // The table format omits component ratios; recover them from the json view.
  auto j = nlohmann::json::parse(assess_json, nullptr, false);
  if (j.is_discarded()) return "";
  std::ostringstream out;
  const auto& chips = j["chips"];
  const auto& ratios = j["ratios_vs_baseline"];
  out << "\nComponent ratios vs " << chips[0]["name"].get<std::string>() << ":\n";
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "  %s: manufacturing %.2fX, assembly %.2fX, use %.3gX, area %.1fX\n",
                  chips[i]["name"].get<std::string>().c_str(),
                  ratios[i]["manufacturing"].get<double>(),
                  ratios[i]["assembly"].get<double>(), ratios[i]["use"].get<double>(),
                  ratios[i]["area"].get<double>());
    out << line;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Process-based life-cycle energy and inventory assessment for integrated circuits"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string scenario_path, inventory_path, format = "table", out_path;
  std::string model = "murphy", param_path, values_list, grid_spec, columns;
  double area_cm2 = 0, defect_density = 0, target_yield = 0, factor = 2;
  double diameter_mm = 0, die_area_mm2 = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  int chip_index = -1;
  bool full_geometry = false;

  auto* cmd_validate = app.add_subcommand("validate", "Check a scenario file and report every problem");
  cmd_validate->add_option("--scenario", scenario_path, "Scenario file")->required();

  auto* cmd_yield = app.add_subcommand("yield", "Evaluate a yield model (or its Monte-Carlo oracle)");
  cmd_yield->add_option("--model", model, "murphy|poisson|seeds");
  cmd_yield->add_option("--area-cm2", area_cm2, "Die area in cm^2")->required();
  cmd_yield->add_option("--defect-density", defect_density, "Defects per cm^2")->required();
  cmd_yield->add_option("--trials", trials, "Monte-Carlo trials (switches to the sampling oracle)");
  cmd_yield->add_option("--seed", seed, "Monte-Carlo seed");
  cmd_yield->add_option("--diameter-mm", diameter_mm, "Wafer diameter for Monte-Carlo (mm)");

  auto* cmd_calibrate = app.add_subcommand("calibrate", "Find the defect density matching a target yield");
  cmd_calibrate->add_option("--model", model, "murphy|poisson|seeds");
  cmd_calibrate->add_option("--area-cm2", area_cm2, "Die area in cm^2")->required();
  cmd_calibrate->add_option("--target-yield", target_yield, "Target yield in (0, 1]")->required();

  auto* cmd_dpw = app.add_subcommand("dpw", "Gross die-per-wafer estimate");
  cmd_dpw->add_option("--diameter-mm", diameter_mm, "Wafer diameter (mm)")->required();
  cmd_dpw->add_option("--die-area-mm2", die_area_mm2, "Die area (mm^2)")->required();

  auto* cmd_assess = app.add_subcommand("assess", "Assess all chips in a scenario and render the report");
  cmd_assess->add_option("--scenario", scenario_path, "Scenario file")->required();
  cmd_assess->add_option("--format", format, "table|json|csv");
  cmd_assess->add_option("--out", out_path, "Output path (default stdout)");

  auto* cmd_compare = app.add_subcommand("compare", "Assessment report plus component ratios");
  cmd_compare->add_option("--scenario", scenario_path, "Scenario file")->required();
  cmd_compare->add_option("--format", format, "table|json|csv");
  cmd_compare->add_option("--out", out_path, "Output path (default stdout)");

  auto* cmd_whatif = app.add_subcommand("whatif", "Die-area downscaling what-if at fixed defect density");
  cmd_whatif->add_option("--scenario", scenario_path, "Scenario file")->required();
  cmd_whatif->add_option("--chip", chip_index, "Chip index (default: last chip)");
  cmd_whatif->add_option("--factor", factor, "Area downscale factor (> 0)")->required();
  cmd_whatif->add_flag("--full-geometry", full_geometry,
                       "Re-run the die-per-wafer edge correction instead of pure area scaling");
  cmd_whatif->add_option("--format", format, "table|json|csv");
  cmd_whatif->add_option("--out", out_path, "Output path (default stdout)");

  auto* cmd_sweep = app.add_subcommand("sweep", "Evaluate a scenario over a parameter grid (CSV out)");
  cmd_sweep->add_option("--scenario", scenario_path, "Scenario file")->required();
  cmd_sweep->add_option("--param", param_path, "Parameter path, e.g. chips[1].downscale_factor")->required();
  cmd_sweep->add_option("--values", values_list, "Explicit comma-separated values");
  cmd_sweep->add_option("--grid", grid_spec, "START:STOP:COUNT[:log]");
  cmd_sweep->add_option("--columns", columns, "Comma-separated output columns (default: all)");
  cmd_sweep->add_option("--out", out_path, "Output path (default stdout)");

  auto* cmd_materials = app.add_subcommand("materials", "Aggregate material flows of an inventory");
  cmd_materials->add_option("--inventory", inventory_path, "Inventory CSV")->required();
  cmd_materials->add_option("--format", format, "table|json|csv");
  cmd_materials->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_validate->parsed()) {
    Scenario s;
    const auto status = lcaic_scenario_load(scenario_path.c_str(), &s.handle);
    if (status != LCAIC_OK) return report_error(status);
    std::cout << "valid: " << lcaic_scenario_chip_count(s.handle) << " chip(s)";
    for (int i = 0; i < lcaic_scenario_chip_count(s.handle); ++i)
      std::cout << (i ? ", " : " [") << lcaic_scenario_chip_name(s.handle, i);
    std::cout << "]\n";
    return kExitOk;
  }

  if (cmd_yield->parsed()) {
    double y = 0;
    lcaic_status status;
    if (trials > 0) {
      if (diameter_mm <= 0) {
        std::cerr << "error: --trials requires --diameter-mm\n";
        return kExitUsage;
      }
      status = lcaic_monte_carlo_yield(area_cm2, defect_density, diameter_mm, trials, seed, &y);
    } else {
      status = lcaic_yield(model.c_str(), area_cm2, defect_density, &y);
    }
    if (status != LCAIC_OK) return report_error(status);
    std::printf("%.6f\n", y);
    return kExitOk;
  }

  if (cmd_calibrate->parsed()) {
    double d = 0;
    const auto status =
        lcaic_calibrate_defect_density(model.c_str(), area_cm2, target_yield, &d);
    if (status != LCAIC_OK) return report_error(status);
    std::printf("%.12g\n", d);
    return kExitOk;
  }

  if (cmd_dpw->parsed()) {
    double gross_real = 0;
    long long gross = 0;
    const auto status = lcaic_gross_dies(diameter_mm, die_area_mm2, &gross_real, &gross);
    if (status != LCAIC_OK) return report_error(status);
    std::printf("gross_real %.4f\ngross %lld\n", gross_real, gross);
    return kExitOk;
  }

  if (cmd_assess->parsed() || cmd_compare->parsed()) {
    Scenario s;
    auto status = lcaic_scenario_load(scenario_path.c_str(), &s.handle);
    if (status != LCAIC_OK) return report_error(status);
    OwnedString text;
    status = lcaic_assess_render(s.handle, format.c_str(), &text.s);
    if (status != LCAIC_OK) return report_error(status);
    std::string output = text.s;
    if (cmd_compare->parsed() && format == "table") {
      OwnedString as_json;
      if (lcaic_assess_render(s.handle, "json", &as_json.s) == LCAIC_OK)
        output += ratios_block(as_json.s);
    }
    return write_output(output, out_path);
  }

  if (cmd_whatif->parsed()) {
    Scenario s;
    auto status = lcaic_scenario_load(scenario_path.c_str(), &s.handle);
    if (status != LCAIC_OK) return report_error(status);
    if (chip_index < 0) chip_index = lcaic_scenario_chip_count(s.handle) - 1;
    OwnedString text;
    status = lcaic_whatif_render(s.handle, chip_index, factor, full_geometry ? 1 : 0,
                                 format.c_str(), &text.s);
    if (status != LCAIC_OK) return report_error(status);
    return write_output(text.s, out_path);
  }

  if (cmd_sweep->parsed()) {
    if (values_list.empty() == grid_spec.empty()) {
      std::cerr << "error: give exactly one of --values or --grid\n";
      return kExitUsage;
    }
    std::vector<double> values;
    if (!values_list.empty() && !parse_values_list(values_list, values)) {
      std::cerr << "error: bad --values list '" << values_list << "'\n";
      return kExitUsage;
    }
    if (!grid_spec.empty() && !parse_grid_spec(grid_spec, values)) {
      std::cerr << "error: bad --grid spec '" << grid_spec
                << "' (expected START:STOP:COUNT[:log])\n";
      return kExitUsage;
    }
    Scenario s;
    auto status = lcaic_scenario_load(scenario_path.c_str(), &s.handle);
    if (status != LCAIC_OK) return report_error(status);
    OwnedString text;
    status = lcaic_sweep_render(s.handle, param_path.c_str(), values.data(),
                                static_cast<int>(values.size()),
                                columns.empty() ? nullptr : columns.c_str(), &text.s);
    if (status != LCAIC_OK) return report_error(status);
    return write_output(text.s, out_path);
  }

  if (cmd_materials->parsed()) {
    Inventory inv;
    auto status = lcaic_inventory_load(inventory_path.c_str(), &inv.handle);
    if (status != LCAIC_OK) return report_error(status);
    OwnedString text;
    status = lcaic_materials_render(inv.handle, format.c_str(), &text.s);
    if (status != LCAIC_OK) return report_error(status);
    return write_output(text.s, out_path);
  }

  return kExitUsage;
}
