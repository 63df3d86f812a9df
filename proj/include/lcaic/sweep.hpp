#pragma once

// Parameter sweeps: evaluate a scenario over a grid of values for one
// parameter and emit one CSV row per grid point.

#include <string>
#include <vector>

#include "lcaic/model.hpp"

namespace lcaic {

struct SweepSpec {
  // One of the paths returned by valid_sweep_paths(), e.g.
  // "chips[1].downscale_factor" or "chips[0].cooling_multiplier".
  std::string param_path;
  std::vector<double> values;
  // Subset of header names to emit; empty means all columns.
  std::vector<std::string> columns;
};

std::vector<std::string> valid_sweep_paths();

// Linear or log grid with `count` points from start to stop inclusive.
std::vector<double> make_grid(double start, double stop, int count, bool log_scale);

// Each grid point is evaluated independently on a fresh copy of the
// scenario; rows appear in grid order. The scenario must already be
// validated. Throws std::invalid_argument for an unknown parameter path
// (the message lists the valid ones).
std::string run_sweep(const Scenario& scenario, const SweepSpec& sweep);

}  // namespace lcaic
