#include "windrose/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "windrose/error.hpp"

namespace windrose {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;

double wrap_pi(double a) {
  double t = std::fmod(a, kPi);
  if (t < 0.0) t += kPi;
  return t >= kPi ? 0.0 : t;
}

void check_cell(const AnnularSector& cell) {
  if (!std::isfinite(cell.r_inner) || !std::isfinite(cell.r_outer) || !std::isfinite(cell.angle_lo_deg) ||
      !std::isfinite(cell.angle_hi_deg)) {
    throw Error(ErrorCode::kDegenerateCell, "cell bounds must be finite");
  }
  if (cell.r_inner < 0.0 || cell.r_outer <= cell.r_inner) {
    throw Error(ErrorCode::kDegenerateCell, "cell needs 0 <= r_inner < r_outer");
  }
  const double w = cell.width_deg();
  if (w <= 0.0) throw Error(ErrorCode::kDegenerateCell, "cell has zero angular width");
  if (w > 180.0) throw Error(ErrorCode::kBadGeometry, "cell angular width exceeds 180 degrees");
}

void check_strip(const Strip& s) {
  if (!std::isfinite(s.half_width_kmph) || s.half_width_kmph <= 0.0 || !std::isfinite(s.axis_azimuth_deg)) {
    throw Error(ErrorCode::kBadGeometry, "strip half-width must be finite and positive");
  }
}

struct StripRad {
  double axis;  // radians
  double c;
};

double bound_at(const StripRad& s, double phi) {
  const double sn = std::abs(std::sin(phi - s.axis));
  return sn == 0.0 ? std::numeric_limits<double>::infinity() : s.c / sn;
}

// splitmix64 finalizer; a counter-based stream keyed by (seed, counter).
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_from(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

double AnnularSector::width_deg() const {
  const double w = normalize_azimuth(angle_hi_deg - angle_lo_deg);
  return w;
}

double AnnularSector::area() const {
  return 0.5 * (r_outer * r_outer - r_inner * r_inner) * width_deg() * kDegToRad;
}

AnnularSector rose_cell(const BandGeometry& geometry, std::size_t band, double center_deg, double width_deg) {
  return AnnularSector{geometry.band_lo(band), geometry.band_hi(band),
                       normalize_azimuth(center_deg - 0.5 * width_deg),
                       normalize_azimuth(center_deg + 0.5 * width_deg)};
}

double radial_bound(double phi_deg, double half_width_kmph) {
  if (std::fmod(phi_deg, 180.0) == 0.0) return std::numeric_limits<double>::infinity();
  const double sn = std::abs(std::sin(phi_deg * kDegToRad));
  return sn == 0.0 ? std::numeric_limits<double>::infinity() : half_width_kmph / sn;
}

double covered_fraction(const AnnularSector& cell, std::span<const Strip> strips) {
  check_cell(cell);
  if (strips.empty()) return 0.0;

  std::vector<StripRad> rad;
  rad.reserve(strips.size());
  for (const auto& s : strips) {
    check_strip(s);
    rad.push_back({s.axis_azimuth_deg * kDegToRad, s.half_width_kmph});
  }

  const double lo = cell.angle_lo_deg * kDegToRad;
  const double width = cell.width_deg() * kDegToRad;
  const double ri = cell.r_inner;
  const double ro = cell.r_outer;

  std::vector<double> cuts{0.0, width};
  auto add_cut = [&](double alpha) {
    const double t = wrap_pi(alpha - lo);
    if (t > 0.0 && t < width) cuts.push_back(t);
    if (t + kPi < width) cuts.push_back(t + kPi);
  };

  for (const auto& s : rad) {
    add_cut(s.axis);
    for (double r : {ri, ro}) {
      if (r > s.c) {
        const double a = std::asin(s.c / r);
        add_cut(s.axis + a);
        add_cut(s.axis + kPi - a);
      }
    }
  }
  for (std::size_t i = 0; i < rad.size(); ++i) {
    for (std::size_t j = i + 1; j < rad.size(); ++j) {
      const auto& a = rad[i];
      const auto& b = rad[j];
      for (double sign : {1.0, -1.0}) {
        const double y = b.c * std::sin(a.axis) - sign * a.c * std::sin(b.axis);
        const double x = b.c * std::cos(a.axis) - sign * a.c * std::cos(b.axis);
        if (std::hypot(x, y) > 1e-12 * (a.c + b.c)) add_cut(std::atan2(y, x));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  bool all_full = true;
  bool all_empty = true;
  double covered = 0.0;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double t1 = cuts[p];
    const double t2 = cuts[p + 1];
    if (!(t2 > t1)) continue;
    const double mid = lo + 0.5 * (t1 + t2);
    std::size_t dom = 0;
    double b = bound_at(rad[0], mid);
    for (std::size_t s = 1; s < rad.size(); ++s) {
      const double bs = bound_at(rad[s], mid);
      if (bs > b) {
        b = bs;
        dom = s;
      }
    }
    if (b >= ro) {
      all_empty = false;
      covered += 0.5 * (ro * ro - ri * ri) * (t2 - t1);
    } else if (b <= ri) {
      all_full = false;
    } else {
      all_full = false;
      all_empty = false;
      const auto& s = rad[dom];
      const double x1 = lo + t1 - s.axis;
      const double x2 = lo + t2 - s.axis;
      const double cot1 = std::cos(x1) / std::sin(x1);
      const double cot2 = std::cos(x2) / std::sin(x2);
      covered += 0.5 * s.c * s.c * (cot1 - cot2) - 0.5 * ri * ri * (t2 - t1);
    }
  }
  if (all_full) return 1.0;
  if (all_empty) return 0.0;
  const double total = 0.5 * (ro * ro - ri * ri) * width;
  return std::clamp(covered / total, 0.0, 1.0);
}

double sector_strip_overlap_fraction(const AnnularSector& cell, const Strip& strip) {
  return covered_fraction(cell, std::span<const Strip>(&strip, 1));
}

double union_overlap_fraction(const AnnularSector& cell, const Strip& strip_a, const Strip& strip_b) {
  const Strip both[] = {strip_a, strip_b};
  return covered_fraction(cell, both);
}

double mc_overlap_fraction(const AnnularSector& cell, std::span<const Strip> strips, std::size_t samples,
                           std::uint64_t seed) {
  check_cell(cell);
  if (samples == 0) throw Error(ErrorCode::kBadOptions, "Monte Carlo needs at least one sample");
  std::vector<StripRad> rad;
  for (const auto& s : strips) {
    check_strip(s);
    rad.push_back({s.axis_azimuth_deg * kDegToRad, s.half_width_kmph});
  }
  const double lo = cell.angle_lo_deg * kDegToRad;
  const double width = cell.width_deg() * kDegToRad;
  const double ri2 = cell.r_inner * cell.r_inner;
  const double span2 = cell.r_outer * cell.r_outer - ri2;

  auto count_range = [&](std::size_t begin, std::size_t end) {
    std::size_t hits = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const double r = std::sqrt(ri2 + unit_from(seed, 2 * i) * span2);
      const double phi = lo + unit_from(seed, 2 * i + 1) * width;
      for (const auto& s : rad) {
        if (r * std::abs(std::sin(phi - s.axis)) <= s.c) {
          ++hits;
          break;
        }
      }
    }
    return hits;
  };

  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::size_t hits = 0;
  if (workers == 1 || samples < 100'000) {
    hits = count_range(0, samples);
  } else {
    std::vector<std::size_t> partial(workers, 0);
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = std::min(samples, w * chunk);
      const std::size_t e = std::min(samples, b + chunk);
      pool.emplace_back([&, w, b, e] { partial[w] = count_range(b, e); });
    }
    for (auto& t : pool) t.join();
    for (auto h : partial) hits += h;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

CoefficientTable coefficient_table(const BandGeometry& geometry, const OrientationClasses& classes,
                                   double half_width_kmph) {
  const Strip strip{0.0, half_width_kmph};
  check_strip(strip);
  const std::size_t n = classes.count();
  CoefficientTable table;
  table.source = CoefficientSource::kDerived;
  table.half_width_kmph = half_width_kmph;
  table.rows.assign(geometry.band_count(), std::vector<double>(n, 0.0));
  for (std::size_t b = 0; b < geometry.band_count(); ++b) {
    // Offsets k and n - k are mirror images across the axis; compute once.
    for (std::size_t k = 0; k <= n / 2; ++k) {
      const double f =
          sector_strip_overlap_fraction(rose_cell(geometry, b, classes.azimuth_deg(k), classes.width_deg()), strip);
      table.rows[b][k] = f;
      if (k > 0) table.rows[b][n - k] = f;
    }
  }
  return table;
}

OracleComparison verify_against_oracle(const CoefficientTable& exact, const BandGeometry& geometry,
                                       const OrientationClasses& classes, std::size_t samples,
                                       std::uint64_t seed) {
  if (exact.band_count() != geometry.band_count() || exact.class_count() != classes.count()) {
    throw Error(ErrorCode::kDimensionMismatch, "table does not match the band geometry");
  }
  const Strip strip{0.0, exact.half_width_kmph};
  OracleComparison out;
  for (std::size_t b = 0; b < geometry.band_count(); ++b) {
    for (std::size_t k = 0; k < classes.count(); ++k) {
      const auto cell = rose_cell(geometry, b, classes.azimuth_deg(k), classes.width_deg());
      const double dev = std::abs(exact.at(b, k) - mc_overlap_oracle(cell, strip, samples, seed));
      if (dev > out.max_abs_deviation) out = {dev, b, k};
    }
  }
  return out;
}

}  // namespace windrose
