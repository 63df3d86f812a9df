// extern-C surface over the C++ core. All exceptions and validation error
// lists are converted to status codes plus a thread-local message.

#include "lcaic.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "lcaic/energy.hpp"
#include "lcaic/inventory_io.hpp"
#include "lcaic/model.hpp"
#include "lcaic/sweep.hpp"
#include "lcaic/yield.hpp"

namespace {

thread_local std::string g_last_error;

lcaic_status fail(lcaic_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

lcaic_status ok() {
  g_last_error.clear();
  return LCAIC_OK;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps C++ exceptions from the core to statuses.
template <typename Fn>
lcaic_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    return fail(LCAIC_ERR_VALIDATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LCAIC_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(LCAIC_ERR_VALIDATION, e.what());
  }
}

std::optional<lcaic::YieldModel> model_arg(const char* model) {
  if (!model) return std::nullopt;
  return lcaic::yield_model_from_string(model);
}

std::optional<lcaic::ReportFormat> format_arg(const char* format) {
  if (!format) return std::nullopt;
  return lcaic::report_format_from_string(format);
}

}  // namespace

struct lcaic_scenario {
  lcaic::Scenario scenario;
};

struct lcaic_inventory {
  lcaic::ProcessInventory inventory;
};

extern "C" {

const char* lcaic_last_error(void) { return g_last_error.c_str(); }

void lcaic_string_free(char* s) { delete[] s; }

lcaic_status lcaic_scenario_load(const char* path, lcaic_scenario** out) {
  if (!path || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  *out = nullptr;
  auto parsed = lcaic::parse_scenario_file(path);
  if (!parsed.ok()) {
    const bool io = parsed.errors.size() == 1 && parsed.errors[0].message == "cannot open file";
    return fail(io ? LCAIC_ERR_IO : LCAIC_ERR_VALIDATION,
                lcaic::format_errors(parsed.errors));
  }
  *out = new lcaic_scenario{std::move(*parsed.value)};
  return ok();
}

void lcaic_scenario_free(lcaic_scenario* s) { delete s; }

int lcaic_scenario_chip_count(const lcaic_scenario* s) {
  return s ? static_cast<int>(s->scenario.chips.size()) : 0;
}

const char* lcaic_scenario_chip_name(const lcaic_scenario* s, int index) {
  if (!s || index < 0 || index >= static_cast<int>(s->scenario.chips.size())) return nullptr;
  return s->scenario.chips[static_cast<std::size_t>(index)].chip.name.c_str();
}

lcaic_status lcaic_inventory_load(const char* path, lcaic_inventory** out) {
  if (!path || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  *out = nullptr;
  auto parsed = lcaic::parse_inventory_file(path);
  if (!parsed.ok()) {
    const bool io = parsed.errors.size() == 1 && parsed.errors[0].message == "cannot open file";
    return fail(io ? LCAIC_ERR_IO : LCAIC_ERR_VALIDATION,
                lcaic::format_errors(parsed.errors));
  }
  *out = new lcaic_inventory{std::move(*parsed.value)};
  return ok();
}

void lcaic_inventory_free(lcaic_inventory* inv) { delete inv; }

lcaic_status lcaic_inventory_stats(const lcaic_inventory* inv, int* step_count,
                                   double* total_kwh) {
  if (!inv) return fail(LCAIC_ERR_USAGE, "null inventory");
  if (step_count) *step_count = static_cast<int>(inv->inventory.steps.size());
  if (total_kwh) *total_kwh = inv->inventory.total_energy_kwh();
  return ok();
}

lcaic_status lcaic_yield(const char* model, double area_cm2, double defect_density_per_cm2,
                         double* out) {
  const auto m = model_arg(model);
  if (!m) return fail(LCAIC_ERR_USAGE, "unknown yield model (use murphy, poisson, or seeds)");
  if (!out) return fail(LCAIC_ERR_USAGE, "null output");
  return guarded([&] {
    *out = lcaic::yield_fraction(*m, area_cm2, defect_density_per_cm2);
    return ok();
  });
}

lcaic_status lcaic_calibrate_defect_density(const char* model, double area_cm2,
                                            double target_yield, double* out) {
  const auto m = model_arg(model);
  if (!m) return fail(LCAIC_ERR_USAGE, "unknown yield model (use murphy, poisson, or seeds)");
  if (!out) return fail(LCAIC_ERR_USAGE, "null output");
  return guarded([&] {
    *out = lcaic::calibrate_defect_density(*m, area_cm2, target_yield);
    return ok();
  });
}

lcaic_status lcaic_gross_dies(double diameter_mm, double die_area_mm2, double* gross_real,
                              long long* gross) {
  return guarded([&] {
    const auto count = lcaic::gross_dies_per_wafer(diameter_mm, die_area_mm2);
    if (gross_real) *gross_real = count.gross_real;
    if (gross) *gross = count.gross;
    return ok();
  });
}

lcaic_status lcaic_monte_carlo_yield(double area_cm2, double defect_density_per_cm2,
                                     double wafer_diameter_mm, long long trials,
                                     uint64_t seed, double* out) {
  if (!out) return fail(LCAIC_ERR_USAGE, "null output");
  return guarded([&] {
    *out = lcaic::monte_carlo_yield(area_cm2, defect_density_per_cm2, wafer_diameter_mm,
                                    trials, seed);
    return ok();
  });
}

lcaic_status lcaic_assess_render(const lcaic_scenario* s, const char* format, char** out) {
  if (!s || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  const auto f = format_arg(format);
  if (!f) return fail(LCAIC_ERR_USAGE, "unknown format (use table, json, or csv)");
  return guarded([&] {
    *out = dup_string(lcaic::render_report(lcaic::assess_scenario(s->scenario), *f));
    return ok();
  });
}

lcaic_status lcaic_whatif_render(const lcaic_scenario* s, int chip_index, double factor,
                                 int full_geometry, const char* format, char** out) {
  if (!s || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  const auto f = format_arg(format);
  if (!f) return fail(LCAIC_ERR_USAGE, "unknown format (use table, json, or csv)");
  const auto& chips = s->scenario.chips;
  if (chip_index < 0 || chip_index >= static_cast<int>(chips.size()))
    return fail(LCAIC_ERR_USAGE, "chip index out of range");
  return guarded([&] {
    // Baseline is the first chip, or the other chip when index 0 is scaled.
    const std::size_t target = static_cast<std::size_t>(chip_index);
    const std::size_t base = (target == 0 && chips.size() > 1) ? 1 : 0;
    const auto baseline = lcaic::assess_chip(chips[base], s->scenario);
    const auto result = lcaic::downscale_whatif(chips[target], s->scenario, factor,
                                                baseline.energies, full_geometry != 0);
    *out = dup_string(lcaic::render_whatif(result, *f));
    return ok();
  });
}

lcaic_status lcaic_sweep_render(const lcaic_scenario* s, const char* param_path,
                                const double* values, int value_count,
                                const char* columns_csv, char** out) {
  if (!s || !param_path || !values || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  if (value_count < 1) return fail(LCAIC_ERR_USAGE, "need at least one sweep value");
  return guarded([&] {
    lcaic::SweepSpec spec;
    spec.param_path = param_path;
    spec.values.assign(values, values + value_count);
    if (columns_csv && *columns_csv) {
      std::string cur;
      for (const char* p = columns_csv;; ++p) {
        if (*p == ',' || *p == '\0') {
          if (!cur.empty()) spec.columns.push_back(cur);
          cur.clear();
          if (*p == '\0') break;
        } else {
          cur.push_back(*p);
        }
      }
    }
    *out = dup_string(lcaic::run_sweep(s->scenario, spec));
    return ok();
  });
}

lcaic_status lcaic_materials_render(const lcaic_inventory* inv, const char* format,
                                    char** out) {
  if (!inv || !out) return fail(LCAIC_ERR_USAGE, "null argument");
  const auto f = format_arg(format);
  if (!f) return fail(LCAIC_ERR_USAGE, "unknown format (use table, json, or csv)");
  return guarded([&] {
    *out = dup_string(lcaic::render_materials(lcaic::aggregate_materials(inv->inventory), *f));
    return ok();
  });
}

}  // extern "C"
