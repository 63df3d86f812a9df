#include "lcaic/yield.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace lcaic {
namespace {

double yield_of_ad(YieldModel variant, double ad) {
  if (ad == 0) return 1.0;
  switch (variant) {
    case YieldModel::murphy: {
      // -expm1(-x)/x stays accurate down to x -> 0
      const double b = -std::expm1(-ad) / ad;
      return b * b;
    }
    case YieldModel::poisson:
      return std::exp(-ad);
    case YieldModel::seeds:
      return 1.0 / (1.0 + ad);
  }
  return 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double yield_fraction(YieldModel variant, double die_area_cm2, double defect_density_per_cm2) {
  if (!(die_area_cm2 > 0)) throw std::domain_error("yield_fraction: die area must be > 0");
  if (!(defect_density_per_cm2 >= 0))
    throw std::domain_error("yield_fraction: defect density must be >= 0");
  return yield_of_ad(variant, die_area_cm2 * defect_density_per_cm2);
}

double yield_fraction(const YieldModelSpec& model, double die_area_cm2) {
  return yield_fraction(model.variant, die_area_cm2, model.defect_density_per_cm2);
}

double calibrate_defect_density(YieldModel variant, double die_area_cm2, double target_yield) {
  if (!(die_area_cm2 > 0))
    throw std::domain_error("calibrate_defect_density: die area must be > 0");
  if (!(target_yield > 0 && target_yield <= 1))
    throw std::domain_error("calibrate_defect_density: target yield must be in (0, 1]");
  if (target_yield == 1.0) return 0.0;

  // Bracket [0, hi] with hi doubled until the yield falls below target,
  // then bisect the monotone map D -> Y.
  double hi = 1.0;
  while (yield_fraction(variant, die_area_cm2, hi) > target_yield) hi *= 2;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (yield_fraction(variant, die_area_cm2, mid) > target_yield)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

DieCount gross_dies_per_wafer(double diameter_mm, double die_area_mm2) {
  if (!(diameter_mm > 0)) throw std::domain_error("gross_dies_per_wafer: diameter must be > 0");
  if (!(die_area_mm2 > 0)) throw std::domain_error("gross_dies_per_wafer: die area must be > 0");
  const double r = diameter_mm / 2.0;
  const double gross_real = M_PI * r * r / die_area_mm2 -
                            M_PI * diameter_mm / std::sqrt(2.0 * die_area_mm2);
  if (!(gross_real > 0))
    throw std::domain_error("gross_dies_per_wafer: die too large for wafer (gross <= 0)");
  DieCount count;
  count.gross_real = gross_real;
  count.gross = static_cast<long long>(std::floor(gross_real));
  return count;
}

double functional_dies(double gross_real, double yield) {
  if (!(gross_real > 0)) throw std::domain_error("functional_dies: gross count must be > 0");
  if (!(yield > 0 && yield <= 1)) throw std::domain_error("functional_dies: yield must be in (0, 1]");
  return gross_real * yield;
}

double monte_carlo_yield(double die_area_cm2, double defect_density_per_cm2,
                         double wafer_diameter_mm, long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("monte_carlo_yield: trials must be >= 1");
  if (!(die_area_cm2 > 0)) throw std::domain_error("monte_carlo_yield: die area must be > 0");
  if (!(wafer_diameter_mm > 0))
    throw std::domain_error("monte_carlo_yield: wafer diameter must be > 0");

  const double radius_cm = wafer_diameter_mm / 20.0;
  const double side_cm = std::sqrt(die_area_cm2);
  const int cells = static_cast<int>(std::floor(2.0 * radius_cm / side_cm));
  if (cells < 1) throw std::domain_error("monte_carlo_yield: die does not fit on the wafer");
  const double origin = -0.5 * cells * side_cm;  // center the grid on the wafer

  // Die sites whose full square lies on the wafer. The outermost corner of
  // cell (i, j) decides.
  std::vector<int> full_sites;
  for (int j = 0; j < cells; ++j) {
    for (int i = 0; i < cells; ++i) {
      const double x0 = origin + i * side_cm, x1 = x0 + side_cm;
      const double y0 = origin + j * side_cm, y1 = y0 + side_cm;
      const double cx = std::max(std::abs(x0), std::abs(x1));
      const double cy = std::max(std::abs(y0), std::abs(y1));
      if (cx * cx + cy * cy <= radius_cm * radius_cm) full_sites.push_back(j * cells + i);
    }
  }
  if (full_sites.empty()) throw std::domain_error("monte_carlo_yield: no full die fits on the wafer");

  const double lambda = defect_density_per_cm2 * M_PI * radius_cm * radius_cm;
  std::vector<std::uint32_t> hit(static_cast<std::size_t>(cells) * cells, 0);
  std::uint32_t epoch = 0;

  long long clean = 0, counted = 0;
  for (long long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(t))));
    ++epoch;
    if (lambda > 0) {
      std::poisson_distribution<long long> n_defects(lambda);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const long long k = n_defects(rng);
      for (long long d = 0; d < k; ++d) {
        // uniform over the disc via rejection in the bounding square
        double x, y;
        do {
          x = radius_cm * (2.0 * unit(rng) - 1.0);
          y = radius_cm * (2.0 * unit(rng) - 1.0);
        } while (x * x + y * y > radius_cm * radius_cm);
        const int i = static_cast<int>(std::floor((x - origin) / side_cm));
        const int j = static_cast<int>(std::floor((y - origin) / side_cm));
        if (i >= 0 && i < cells && j >= 0 && j < cells)
          hit[static_cast<std::size_t>(j) * cells + i] = epoch;
      }
    }
    for (int site : full_sites) {
      ++counted;
      if (hit[static_cast<std::size_t>(site)] != epoch) ++clean;
    }
  }
  return static_cast<double>(clean) / static_cast<double>(counted);
}

}  // namespace lcaic
