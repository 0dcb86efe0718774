#include "windrose/coverage.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "windrose/error.hpp"
#include "windrose/format.hpp"

namespace windrose {

std::vector<double> coverage_vector(const WindRose& rose, const CoefficientTable& table) {
  check_table(table);
  if (table.band_count() != rose.band_count() || table.class_count() != rose.class_count()) {
    std::ostringstream msg;
    msg << "coefficient table is " << table.band_count() << "x" << table.class_count() << " but the rose is "
        << rose.band_count() << "x" << rose.class_count();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  const std::size_t n = rose.class_count();
  const double calm = rose.calm();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double add = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t offset = (j + n - i) % n;
      for (std::size_t b = 0; b < rose.band_count(); ++b) {
        add = add + table.rows[b][offset] * rose.cell(b, j);
      }
    }
    out[i] = calm + add;
  }
  return out;
}

BestOrientation best_orientation(std::span<const double> coverage) {
  if (coverage.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty coverage vector");
  BestOrientation best{0, coverage[0]};
  for (std::size_t i = 1; i < coverage.size(); ++i) {
    if (coverage[i] > best.value) best = {i, coverage[i]};
  }
  return best;
}

std::string_view to_string(Numbering numbering) {
  return numbering == Numbering::kPaper ? "paper" : "standard";
}

Numbering parse_numbering(std::string_view text) {
  if (text == "standard") return Numbering::kStandard;
  if (text == "paper") return Numbering::kPaper;
  throw Error(ErrorCode::kBadOptions, "unknown runway numbering '" + std::string(text) + "'");
}

std::string RunwayDesignator::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d-%02d", low_number, high_number);
  return buf;
}

RunwayDesignator runway_designator(double azimuth_deg) {
  if (!std::isfinite(azimuth_deg)) throw Error(ErrorCode::kBadOptions, "azimuth must be finite");
  const double folded = std::fmod(normalize_azimuth(azimuth_deg), 180.0);
  int n = static_cast<int>(std::floor(folded / 10.0 + 0.5));
  if (n == 0) n = 36;
  const int low = n > 18 ? n - 18 : n;
  return {low, low + 18};
}

RunwayDesignator paper_runway_designator(std::size_t class_index, std::size_t class_count) {
  if (class_count != 8) {
    throw Error(ErrorCode::kCompatModeUnavailable, "legacy runway numbering is defined for 8 classes only");
  }
  if (class_index >= class_count) throw Error(ErrorCode::kDimensionMismatch, "class index out of range");
  if (class_index == 0) return {18, 36};
  const int k = static_cast<int>(class_index);
  return {k, k + 18};
}

RunwayDesignator runway_designator(Numbering mode, double azimuth_deg, std::size_t class_index,
                                   std::size_t class_count) {
  return mode == Numbering::kPaper ? paper_runway_designator(class_index, class_count)
                                   : runway_designator(azimuth_deg);
}

std::string orientation_name(double azimuth_deg) {
  static constexpr std::array<const char*, 16> kPoints = {"N",  "NNE", "NE", "ENE", "E",  "ESE", "SE", "SSE",
                                                          "S",  "SSW", "SW", "WSW", "W",  "WNW", "NW", "NNW"};
  const double folded = std::fmod(normalize_azimuth(azimuth_deg), 180.0);
  const double step = folded / 22.5;
  if (std::abs(step - std::round(step)) < 1e-9) {
    const auto k = static_cast<std::size_t>(std::round(step)) % 8;
    return std::string(kPoints[k]) + "-" + kPoints[k + 8];
  }
  return format_fixed(folded, 1) + "-" + format_fixed(folded + 180.0, 1);
}

CoverageReport apply_threshold(CoverageReport report, double threshold_pct) {
  if (!(threshold_pct > 0.0 && threshold_pct <= 100.0)) {
    throw Error(ErrorCode::kBadOptions, "threshold must be in (0, 100]");
  }
  report.threshold_pct = threshold_pct;
  report.meets_threshold = report.best_coverage_pct >= threshold_pct;
  return report;
}

CoverageReport make_report(const WindRose& rose, const CoefficientTable& table, Numbering numbering,
                           double threshold_pct) {
  validate_rose(rose);
  CoverageReport report;
  report.coverage = coverage_vector(rose, table);
  report.calm_pct = rose.calm();
  report.above_max_pct = rose.above_max();
  const auto best = best_orientation(report.coverage);
  report.best_class = best.index;
  report.best_coverage_pct = best.value;
  report.best_azimuth_deg = rose.classes().azimuth_deg(best.index);
  report.designator = runway_designator(numbering, report.best_azimuth_deg, best.index, rose.class_count());
  return apply_threshold(std::move(report), threshold_pct);
}

double pair_coverage(const WindRose& rose, std::size_t class_a, std::size_t class_b, double half_width_kmph) {
  const auto& classes = rose.classes();
  if (class_a >= classes.count() || class_b >= classes.count()) {
    throw Error(ErrorCode::kDimensionMismatch, "class index out of range");
  }
  if (class_a == class_b) throw Error(ErrorCode::kSameClass, "pair needs two distinct classes");
  const Strip strip_a{classes.azimuth_deg(class_a), half_width_kmph};
  const Strip strip_b{classes.azimuth_deg(class_b), half_width_kmph};
  double add = 0.0;
  for (std::size_t j = 0; j < classes.count(); ++j) {
    for (std::size_t b = 0; b < rose.band_count(); ++b) {
      const double pct = rose.cell(b, j);
      if (pct == 0.0) continue;
      // The antipodal half of the class is the point reflection of this
      // sector; both strips pass through the origin so the fraction is equal.
      const auto cell = rose_cell(rose.geometry(), b, classes.azimuth_deg(j), classes.width_deg());
      add = add + union_overlap_fraction(cell, strip_a, strip_b) * pct;
    }
  }
  return rose.calm() + add;
}

std::string_view to_string(PairMode mode) {
  switch (mode) {
    case PairMode::kNone: return "none";
    case PairMode::kPerpendicular: return "perpendicular";
    case PairMode::kExhaustive: return "exhaustive";
  }
  return "none";
}

PairMode parse_pair_mode(std::string_view text) {
  if (text == "none") return PairMode::kNone;
  if (text == "perpendicular") return PairMode::kPerpendicular;
  if (text == "exhaustive") return PairMode::kExhaustive;
  throw Error(ErrorCode::kBadOptions, "unknown pair mode '" + std::string(text) + "'");
}

PairResult best_pair(const WindRose& rose, std::size_t primary_class, PairMode mode, double half_width_kmph) {
  validate_rose(rose);
  const std::size_t n = rose.class_count();
  if (primary_class >= n) throw Error(ErrorCode::kDimensionMismatch, "class index out of range");
  switch (mode) {
    case PairMode::kPerpendicular: {
      if (n % 2 != 0) {
        throw Error(ErrorCode::kOddClassCount, "perpendicular pairing needs an even class count");
      }
      const std::size_t partner = (primary_class + n / 2) % n;
      return {primary_class, partner, pair_coverage(rose, primary_class, partner, half_width_kmph)};
    }
    case PairMode::kExhaustive: {
      PairResult best{primary_class, primary_class, -1.0};
      for (std::size_t k = 0; k < n; ++k) {
        if (k == primary_class) continue;
        const double v = pair_coverage(rose, primary_class, k, half_width_kmph);
        if (v > best.coverage_pct) best = {primary_class, k, v};
      }
      return best;
    }
    case PairMode::kNone:
      break;
  }
  throw Error(ErrorCode::kBadOptions, "pair mode 'none' has no partner");
}

}  // namespace windrose
