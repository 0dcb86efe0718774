#pragma once

// Binned wind data for the Type-II wind rose: speed bands (annular rings)
// crossed with orientation classes (runway lines at uniform spacing).

#include <cstddef>
#include <span>
#include <vector>

namespace windrose {

/// Ring radii in km/h. Band k is the half-open speed range
/// [ring(k), ring(k+1)); anything below the first ring is calm.
class BandGeometry {
 public:
  /// Default rings 6.4 / 15 / 30 / 47 km/h.
  BandGeometry();
  /// Throws Error(kBadGeometry) unless radii are finite, positive and
  /// strictly increasing with at least two entries.
  explicit BandGeometry(std::vector<double> ring_radii);

  double calm_threshold() const { return rings_.front(); }
  double outer_radius() const { return rings_.back(); }
  double ring(std::size_t k) const { return rings_.at(k); }
  std::span<const double> rings() const { return rings_; }
  std::size_t ring_count() const { return rings_.size(); }
  std::size_t band_count() const { return rings_.size() - 1; }
  double band_lo(std::size_t band) const { return rings_.at(band); }
  double band_hi(std::size_t band) const { return rings_.at(band + 1); }

  bool is_default() const;

  friend bool operator==(const BandGeometry&, const BandGeometry&) = default;

 private:
  std::vector<double> rings_;
};

/// Runway lines at azimuth k * (180 / count), clockwise from north. Each
/// class serves winds from both theta and theta + 180.
class OrientationClasses {
 public:
  OrientationClasses() = default;
  /// Throws Error(kBadGeometry) when count < 2.
  explicit OrientationClasses(std::size_t count);

  std::size_t count() const { return count_; }
  double width_deg() const { return 180.0 / static_cast<double>(count_); }
  double azimuth_deg(std::size_t k) const { return static_cast<double>(k) * width_deg(); }

  /// Class whose sector [axis - w/2, axis + w/2) contains the folded
  /// direction. Edges go to the higher-azimuth class.
  std::size_t classify(double direction_deg) const;

  friend bool operator==(const OrientationClasses&, const OrientationClasses&) = default;

 private:
  std::size_t count_ = 8;
};

/// Percent-of-time matrix indexed (band, class). The calm share is implied:
/// 100 - (cells + above_max).
class WindRose {
 public:
  WindRose() : WindRose(BandGeometry{}, OrientationClasses{}) {}
  WindRose(BandGeometry geometry, OrientationClasses classes);
  /// `cells` is band-major: cells[band * classes.count() + class].
  WindRose(BandGeometry geometry, OrientationClasses classes, std::vector<double> cells,
           double above_max = 0.0);

  const BandGeometry& geometry() const { return geometry_; }
  const OrientationClasses& classes() const { return classes_; }
  std::size_t band_count() const { return geometry_.band_count(); }
  std::size_t class_count() const { return classes_.count(); }

  double cell(std::size_t band, std::size_t cls) const { return cells_.at(index(band, cls)); }
  void set_cell(std::size_t band, std::size_t cls, double pct) { cells_.at(index(band, cls)) = pct; }
  std::span<const double> cells() const { return cells_; }
  std::span<const double> band_row(std::size_t band) const;

  double above_max() const { return above_max_; }
  void set_above_max(double pct) { above_max_ = pct; }

  /// Sum of cells, accumulated class-major (all bands of class 0, then
  /// class 1, ...). The order matters for reproducing legacy results bit
  /// for bit.
  double cell_total() const;
  double calm() const { return 100.0 - (cell_total() + above_max_); }

  /// Columns shifted so that class j moves to class (j + k) mod count.
  WindRose rotated(std::size_t k) const;

  friend bool operator==(const WindRose&, const WindRose&) = default;

 private:
  std::size_t index(std::size_t band, std::size_t cls) const;

  BandGeometry geometry_;
  OrientationClasses classes_;
  std::vector<double> cells_;
  double above_max_ = 0.0;
};

inline constexpr double kTotalTolerance = 1e-9;

/// Returns the rose unchanged when every invariant holds.
/// Errors: kNegativeCell, kTotalExceeds100, kBadGeometry.
const WindRose& validate_rose(const WindRose& rose);

struct RawObservation {
  double direction_deg = 0.0;  // FROM-direction, clockwise from north
  double speed_kmph = 0.0;
  double weight = 1.0;
};

/// Wraps any finite azimuth into [0, 360).
double normalize_azimuth(double deg);

/// What happens to winds at or above the outermost ring.
enum class StormPolicy {
  kTrackAboveMax,  // counted in above_max, excluded from every coverage
  kFoldIntoCalm,   // legacy behavior: left unrecorded, so they end up in calm
};

/// Weighted shares of observations as percentages. Errors: kEmptyInput when
/// the total weight is zero, kNegativeWeight, kBadOptions for a negative or
/// non-finite speed/direction.
WindRose bin_observations(std::span<const RawObservation> obs, const BandGeometry& geometry,
                          const OrientationClasses& classes,
                          StormPolicy storm = StormPolicy::kTrackAboveMax);

}  // namespace windrose
