#pragma once

// Per-phase energy computation, technology comparison, node scaling, and the
// downscaling what-if.

#include "lcaic/model.hpp"

namespace lcaic {

// Exact sum over step energies.
double wafer_manufacturing_energy_kwh(const ProcessInventory& inv);

// wafer_energy / (gross_real * yield). Throws std::domain_error on a
// singular denominator.
double manufacturing_energy_per_die_kwh(double wafer_energy_kwh, double gross_real,
                                        double yield);

double assembly_energy_kwh(double assembly_area_cm2, double coefficient_kwh_per_cm2);

// Override, when present, is scaled by service_years / lifetime; otherwise
// operating_power * service_years * hours_per_year * utilization.
double use_phase_energy_kwh(const ChipSpec& chip, double service_years,
                            double hours_per_year);

double cooling_energy_kwh(double use_energy_kwh, double multiplier);

// Full per-die assessment of one scenario entry. Under common_service_period
// the manufacturing, assembly, and use energies are each scaled by
// service_period / lifetime (fractional replacements allowed).
ChipAssessment assess_chip(const ChipEntry& entry, const Scenario& scenario);

// Pairwise improvement factors (baseline total / candidate total), with and
// without cooling, plus component ratios relative to the first chip.
// Requires >= 2 assessments with positive totals.
ComparisonReport compare(const std::vector<ChipAssessment>& assessments);

ComparisonReport assess_scenario(const Scenario& scenario);

// Die-area downscaling at fixed defect density. Gross dies scale with the
// pure area ratio by default; set full_geometry to re-run the die-per-wafer
// edge correction instead. Use and cooling energies are unchanged.
WhatIfResult downscale_whatif(const ChipEntry& entry, const Scenario& scenario,
                              double factor, const PhaseEnergies& baseline,
                              bool full_geometry = false);

// Power-law node scaling: area * r^area_exponent, frequency *
// r^frequency_exponent, power * r^power_exponent with r = to_node / from_node.
ChipSpec scale_to_node(const ChipSpec& chip, double from_node_nm, double to_node_nm,
                       const ScalingParams& params = {});

}  // namespace lcaic
