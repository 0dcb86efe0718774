#include "windrose/rose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "windrose/error.hpp"

namespace windrose {

BandGeometry::BandGeometry() : rings_{6.4, 15.0, 30.0, 47.0} {}

BandGeometry::BandGeometry(std::vector<double> ring_radii) : rings_(std::move(ring_radii)) {
  if (rings_.size() < 2) {
    throw Error(ErrorCode::kBadGeometry, "at least two ring radii are required");
  }
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    if (!std::isfinite(rings_[i]) || rings_[i] <= 0.0) {
      throw Error(ErrorCode::kBadGeometry, "ring radii must be finite and positive");
    }
    if (i > 0 && rings_[i] <= rings_[i - 1]) {
      throw Error(ErrorCode::kBadGeometry, "ring radii must be strictly increasing");
    }
  }
}

bool BandGeometry::is_default() const { return *this == BandGeometry{}; }

OrientationClasses::OrientationClasses(std::size_t count) : count_(count) {
  if (count_ < 2) {
    throw Error(ErrorCode::kBadGeometry, "at least two orientation classes are required");
  }
}

double normalize_azimuth(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  // fmod of a tiny negative value can round back up to exactly 360
  return a >= 360.0 ? 0.0 : a;
}

std::size_t OrientationClasses::classify(double direction_deg) const {
  double folded = std::fmod(normalize_azimuth(direction_deg), 180.0);
  const double w = width_deg();
  auto k = static_cast<std::size_t>(std::floor((folded + 0.5 * w) / w));
  return k % count_;
}

WindRose::WindRose(BandGeometry geometry, OrientationClasses classes)
    : geometry_(std::move(geometry)),
      classes_(classes),
      cells_(geometry_.band_count() * classes_.count(), 0.0) {}

WindRose::WindRose(BandGeometry geometry, OrientationClasses classes, std::vector<double> cells,
                   double above_max)
    : geometry_(std::move(geometry)), classes_(classes), cells_(std::move(cells)), above_max_(above_max) {
  if (cells_.size() != geometry_.band_count() * classes_.count()) {
    std::ostringstream msg;
    msg << "rose has " << cells_.size() << " cells, expected " << geometry_.band_count() << " bands x "
        << classes_.count() << " classes";
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
}

std::size_t WindRose::index(std::size_t band, std::size_t cls) const {
  if (band >= band_count() || cls >= class_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "cell index out of range");
  }
  return band * class_count() + cls;
}

std::span<const double> WindRose::band_row(std::size_t band) const {
  return std::span<const double>(cells_).subspan(index(band, 0), class_count());
}

double WindRose::cell_total() const {
  double sum = 0.0;
  for (std::size_t j = 0; j < class_count(); ++j) {
    for (std::size_t b = 0; b < band_count(); ++b) {
      sum = sum + cells_[b * class_count() + j];
    }
  }
  return sum;
}

WindRose WindRose::rotated(std::size_t k) const {
  WindRose out(geometry_, classes_);
  out.above_max_ = above_max_;
  const std::size_t n = class_count();
  for (std::size_t b = 0; b < band_count(); ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      out.cells_[b * n + (j + k) % n] = cells_[b * n + j];
    }
  }
  return out;
}

const WindRose& validate_rose(const WindRose& rose) {
  if (rose.cells().size() != rose.band_count() * rose.class_count()) {
    throw Error(ErrorCode::kBadGeometry, "cell matrix does not match bands x classes");
  }
  for (std::size_t b = 0; b < rose.band_count(); ++b) {
    for (std::size_t j = 0; j < rose.class_count(); ++j) {
      const double v = rose.cell(b, j);
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << "cell (band " << b << ", class " << j << ") must be a nonnegative percentage, got " << v;
        throw Error(ErrorCode::kNegativeCell, msg.str());
      }
    }
  }
  if (!std::isfinite(rose.above_max()) || rose.above_max() < 0.0) {
    throw Error(ErrorCode::kNegativeCell, "above_max must be a nonnegative percentage");
  }
  const double total = rose.cell_total() + rose.above_max();
  if (total > 100.0 + kTotalTolerance) {
    std::ostringstream msg;
    msg << "Coverage can't be greater than 100: percentages sum to " << total;
    throw Error(ErrorCode::kTotalExceeds100, msg.str());
  }
  return rose;
}

WindRose bin_observations(std::span<const RawObservation> obs, const BandGeometry& geometry,
                          const OrientationClasses& classes, StormPolicy storm) {
  WindRose rose(geometry, classes);
  std::vector<double> weight(rose.cells().size(), 0.0);
  double above = 0.0;
  double total = 0.0;

  for (const auto& o : obs) {
    if (!std::isfinite(o.weight) || o.weight < 0.0) {
      throw Error(ErrorCode::kNegativeWeight, "observation weight must be finite and nonnegative");
    }
    if (!std::isfinite(o.speed_kmph) || o.speed_kmph < 0.0) {
      throw Error(ErrorCode::kBadOptions, "observation speed must be finite and nonnegative");
    }
    if (!std::isfinite(o.direction_deg)) {
      throw Error(ErrorCode::kBadOptions, "observation direction must be finite");
    }
    total += o.weight;
    if (o.speed_kmph < geometry.calm_threshold()) continue;
    if (o.speed_kmph >= geometry.outer_radius()) {
      if (storm == StormPolicy::kTrackAboveMax) above += o.weight;
      continue;
    }
    const auto rings = geometry.rings();
    const auto band =
        static_cast<std::size_t>(std::upper_bound(rings.begin(), rings.end(), o.speed_kmph) - rings.begin()) - 1;
    weight[band * classes.count() + classes.classify(o.direction_deg)] += o.weight;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kEmptyInput, "no observations with positive weight");
  }

  for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = 100.0 * weight[i] / total;
  return WindRose(geometry, classes, std::move(weight), 100.0 * above / total);
}

}  // namespace windrose
