#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/coefficients.hpp"
#include "windrose/geometry.hpp"
#include "windrose/rose.hpp"

namespace windrose {

inline constexpr double kFaaThresholdPct = 95.0;

/// coverage[i] = calm + sum over bands b and classes j of
/// table[b][(j - i) mod n] * cell[b][j].
///
/// Terms are accumulated class by class (inner loop over bands) starting
/// from class 0, so with the legacy table the result matches the original
/// rotate-the-coefficients loop exactly. above_max contributes nothing.
/// Errors: kDimensionMismatch.
std::vector<double> coverage_vector(const WindRose& rose, const CoefficientTable& table);

struct BestOrientation {
  std::size_t index = 0;
  double value = 0.0;
};

/// Lowest index attaining the maximum (strict `>` scan from index 0).
BestOrientation best_orientation(std::span<const double> coverage);

enum class Numbering {
  kStandard,  // round(azimuth / 10), 0 -> 36
  kPaper,     // legacy class-index table, 8 classes only
};

std::string_view to_string(Numbering numbering);
Numbering parse_numbering(std::string_view text);

/// Reciprocal runway numbers; high_number = low_number + 18.
struct RunwayDesignator {
  int low_number = 18;
  int high_number = 36;

  std::string str() const;  // "NN-NN"
  friend bool operator==(const RunwayDesignator&, const RunwayDesignator&) = default;
};

/// Standard numbering from an axis azimuth in [0, 180).
RunwayDesignator runway_designator(double azimuth_deg);
/// Legacy numbering by class index. Errors: kCompatModeUnavailable unless
/// class_count == 8.
RunwayDesignator paper_runway_designator(std::size_t class_index, std::size_t class_count);
RunwayDesignator runway_designator(Numbering mode, double azimuth_deg, std::size_t class_index,
                                   std::size_t class_count);

/// Conventional 16-point name of a runway line ("N-S", "NNE-SSW", ...), or
/// "DDD.D-DDD.D" when the azimuth is not on the 22.5 degree grid.
std::string orientation_name(double azimuth_deg);

struct CoverageReport {
  std::vector<double> coverage;
  double calm_pct = 0.0;
  double above_max_pct = 0.0;
  std::size_t best_class = 0;
  double best_azimuth_deg = 0.0;
  double best_coverage_pct = 0.0;
  RunwayDesignator designator;
  bool meets_threshold = false;
  double threshold_pct = kFaaThresholdPct;
};

/// Validates the rose, evaluates every class and picks the best one.
CoverageReport make_report(const WindRose& rose, const CoefficientTable& table,
                           Numbering numbering = Numbering::kStandard, double threshold_pct = kFaaThresholdPct);

/// meets_threshold = best >= threshold (inclusive). Errors: kBadOptions
/// unless threshold is in (0, 100].
CoverageReport apply_threshold(CoverageReport report, double threshold_pct);

/// Coverage of the two-runway system (a, b) using exact union fractions.
/// Errors: kSameClass, kDimensionMismatch for out-of-range classes.
double pair_coverage(const WindRose& rose, std::size_t class_a, std::size_t class_b,
                     double half_width_kmph = kDefaultHalfWidth);

enum class PairMode { kNone, kPerpendicular, kExhaustive };

std::string_view to_string(PairMode mode);
PairMode parse_pair_mode(std::string_view text);

struct PairResult {
  std::size_t primary = 0;
  std::size_t partner = 0;
  double coverage_pct = 0.0;
};

/// Second runway for a fixed primary class. Perpendicular mode takes the
/// class count/2 away (errors: kOddClassCount); exhaustive mode returns the
/// lowest-index partner with maximal pair coverage.
PairResult best_pair(const WindRose& rose, std::size_t primary_class, PairMode mode,
                     double half_width_kmph = kDefaultHalfWidth);

}  // namespace windrose
