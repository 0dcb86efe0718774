#pragma once

// Area of a wind-rose cell (annular sector) covered by one or more runway
// strips. A strip is the infinite band |r sin(phi - axis)| <= c through the
// origin, so at fixed phi the covered radii form the interval [0, c/|sin|].

#include <cstddef>
#include <cstdint>
#include <span>

#include "windrose/coefficients.hpp"
#include "windrose/rose.hpp"

namespace windrose {

inline constexpr double kDefaultHalfWidth = 25.0;
inline constexpr std::size_t kDefaultMcSamples = 10'000'000;
inline constexpr std::uint64_t kDefaultMcSeed = 0x57494E44524F5345ULL;  // "WINDROSE"

struct Strip {
  double axis_azimuth_deg = 0.0;
  double half_width_kmph = kDefaultHalfWidth;
};

/// Cell between two radii, swept clockwise from angle_lo to angle_hi.
/// Azimuths are absolute degrees; the sweep is at most 180 degrees.
struct AnnularSector {
  double r_inner = 0.0;
  double r_outer = 0.0;
  double angle_lo_deg = 0.0;
  double angle_hi_deg = 0.0;

  double width_deg() const;
  double area() const;
};

/// Sector of band `band` centered on `center_deg` with the class width.
AnnularSector rose_cell(const BandGeometry& geometry, std::size_t band, double center_deg, double width_deg);

/// Largest in-strip radius along relative angle phi: c / |sin(phi)|, or
/// +infinity along the axis itself.
double radial_bound(double phi_deg, double half_width_kmph);

/// Exact fraction of `cell` inside `strip`. Errors: kDegenerateCell,
/// kBadGeometry for a non-positive half-width.
double sector_strip_overlap_fraction(const AnnularSector& cell, const Strip& strip);

/// Exact fraction of `cell` inside strip_a OR strip_b.
double union_overlap_fraction(const AnnularSector& cell, const Strip& strip_a, const Strip& strip_b);

/// Fraction of `cell` covered by the union of any number of strips.
///
/// The cell's angular range is cut wherever the union bound
/// max_s c_s/|sin(phi - axis_s)| meets r_inner or r_outer, where any
/// sin(phi - axis_s) vanishes, and where two strip bounds cross. Every cut
/// is found in closed form. On each piece the integrand
/// 1/2 (min(r_outer, b)^2 - r_inner^2)^+ has a single form, and the
/// c^2/sin^2 term integrates to -c^2 cot.
double covered_fraction(const AnnularSector& cell, std::span<const Strip> strips);

/// Monte Carlo estimate of covered_fraction, sampling area-uniformly.
/// Each sample's randomness derives from (seed, sample index) alone, so the
/// result does not depend on the thread count.
double mc_overlap_fraction(const AnnularSector& cell, std::span<const Strip> strips, std::size_t samples,
                           std::uint64_t seed = kDefaultMcSeed);

inline double mc_overlap_oracle(const AnnularSector& cell, const Strip& strip, std::size_t samples,
                                std::uint64_t seed = kDefaultMcSeed) {
  return mc_overlap_fraction(cell, std::span<const Strip>(&strip, 1), samples, seed);
}

/// Overlap fraction for every band and every angular offset, computed
/// with the strip on azimuth 0 and the cell centered k class-widths away.
CoefficientTable coefficient_table(const BandGeometry& geometry, const OrientationClasses& classes,
                                   double half_width_kmph = kDefaultHalfWidth);

struct OracleComparison {
  double max_abs_deviation = 0.0;
  std::size_t worst_band = 0;
  std::size_t worst_offset = 0;
};

/// Compares a derived table entry by entry against the Monte Carlo oracle.
OracleComparison verify_against_oracle(const CoefficientTable& exact, const BandGeometry& geometry,
                                       const OrientationClasses& classes, std::size_t samples,
                                       std::uint64_t seed = kDefaultMcSeed);

}  // namespace windrose
