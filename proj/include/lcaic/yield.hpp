#pragma once

// Yield models, defect-density calibration, and die-per-wafer geometry.

#include <cstdint>

#include "lcaic/model.hpp"

namespace lcaic {

struct DieCount {
  double gross_real = 0;     // analytic, pre-floor
  long long gross = 0;       // floor(gross_real)
  double functional_expected = 0;  // gross_real * yield
};

// Fraction of functional dies for a given model, die area, and defect
// density. Continuous at area*density == 0 (yield 1). Strictly decreasing
// in area*density for every variant.
//   murphy : ((1 - e^(-AD)) / (AD))^2
//   poisson: e^(-AD)
//   seeds  : 1 / (1 + AD)
double yield_fraction(const YieldModelSpec& model, double die_area_cm2);
double yield_fraction(YieldModel variant, double die_area_cm2, double defect_density_per_cm2);

// Inverts the monotone map D -> yield by bisection. The returned density
// satisfies |yield(variant, area, D) - target| <= 1e-9.
// Throws std::domain_error for target outside (0, 1] or non-positive area.
double calibrate_defect_density(YieldModel variant, double die_area_cm2, double target_yield);

// Standard gross die-per-wafer estimate with edge-loss correction:
//   gross_real = pi (d/2)^2 / S  -  pi d / sqrt(2 S)
// Throws std::domain_error when the die does not fit (gross_real <= 0).
DieCount gross_dies_per_wafer(double diameter_mm, double die_area_mm2);

// gross_real * yield, kept real-valued for energy amortization.
double functional_dies(double gross_real, double yield);

// Scatters Poisson(D * wafer area) uniform defects per trial wafer, tiles
// square dies, and counts defect-free dies among those fully on the wafer.
// Deterministic for a fixed seed; per-trial streams derive from (seed, trial).
// Converges to the poisson analytic value e^(-AD).
double monte_carlo_yield(double die_area_cm2, double defect_density_per_cm2,
                         double wafer_diameter_mm, long long trials, std::uint64_t seed);

}  // namespace lcaic
