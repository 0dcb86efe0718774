#include "windrose/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "windrose/error.hpp"
#include "windrose/format.hpp"

namespace windrose {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kStripMargin = 1.05;
constexpr double kLabelGap = 30.0;

std::string px(double v) { return format_fixed(v, 2); }

struct Canvas {
  double cx;
  double cy;

  // Azimuth clockwise from north, screen y grows downward.
  double x(double azimuth_deg, double r) const { return cx + r * std::sin(azimuth_deg * kDegToRad); }
  double y(double azimuth_deg, double r) const { return cy - r * std::cos(azimuth_deg * kDegToRad); }
};

double sector_centroid_radius(double ri, double ro, double width_deg) {
  const double half = 0.5 * width_deg * kDegToRad;
  const double radial = (2.0 / 3.0) * (ro * ro * ro - ri * ri * ri) / (ro * ro - ri * ri);
  return radial * std::sin(half) / half;
}

}  // namespace

int min_canvas_px(double outer_ring_px) {
  return static_cast<int>(std::ceil(2.0 * (outer_ring_px * kStripMargin + kLabelGap)));
}

std::string render_rose_svg(const WindRose& rose, const RenderOptions& options) {
  validate_rose(rose);
  if (!std::isfinite(options.outer_ring_px) || options.outer_ring_px <= 0.0) {
    throw Error(ErrorCode::kBadOptions, "outer ring radius must be positive");
  }
  if (options.canvas_px < min_canvas_px(options.outer_ring_px)) {
    throw Error(ErrorCode::kBadOptions, "canvas of " + std::to_string(options.canvas_px) +
                                            " px is too small; need at least " +
                                            std::to_string(min_canvas_px(options.outer_ring_px)));
  }
  if (options.decimals < 0 || options.decimals > 10) {
    throw Error(ErrorCode::kBadOptions, "decimal places must be in [0, 10]");
  }
  if (options.strip && (!std::isfinite(options.strip->half_width_kmph) || options.strip->half_width_kmph <= 0.0 ||
                        !std::isfinite(options.strip->axis_azimuth_deg))) {
    throw Error(ErrorCode::kBadOptions, "strip half-width must be positive");
  }

  const auto& geometry = rose.geometry();
  const auto& classes = rose.classes();
  const double scale = options.outer_ring_px / geometry.outer_radius();
  const double size = options.canvas_px;
  const Canvas c{size / 2.0, size / 2.0};
  const double clip_r = options.outer_ring_px * kStripMargin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.canvas_px
      << "\" height=\"" << options.canvas_px << "\" viewBox=\"0 0 " << options.canvas_px << " "
      << options.canvas_px << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << options.canvas_px << "\" height=\"" << options.canvas_px
      << "\" fill=\"white\"/>\n";
  svg << "  <defs>\n    <clipPath id=\"strip-clip\"><circle cx=\"" << px(c.cx) << "\" cy=\"" << px(c.cy)
      << "\" r=\"" << px(clip_r) << "\"/></clipPath>\n  </defs>\n";

  if (options.strip) {
    const double w = 2.0 * options.strip->half_width_kmph * scale;
    const double len = 2.0 * clip_r;
    const double az = std::fmod(normalize_azimuth(options.strip->axis_azimuth_deg), 180.0);
    svg << "  <rect class=\"strip\" x=\"" << px(c.cx - w / 2.0) << "\" y=\"" << px(c.cy - len / 2.0)
        << "\" width=\"" << px(w) << "\" height=\"" << px(len) << "\" transform=\"rotate(" << px(az) << " "
        << px(c.cx) << " " << px(c.cy)
        << ")\" fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"#1f77b4\" stroke-width=\"1\" "
           "clip-path=\"url(#strip-clip)\"/>\n";
  }

  for (double ring : geometry.rings()) {
    svg << "  <circle class=\"ring\" cx=\"" << px(c.cx) << "\" cy=\"" << px(c.cy) << "\" r=\""
        << px(ring * scale) << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  }

  const double inner = geometry.calm_threshold() * scale;
  const double outer = options.outer_ring_px;
  for (std::size_t k = 0; k < 2 * classes.count(); ++k) {
    const double az = (static_cast<double>(k) + 0.5) * classes.width_deg();
    svg << "  <line class=\"spoke\" x1=\"" << px(c.x(az, inner)) << "\" y1=\"" << px(c.y(az, inner))
        << "\" x2=\"" << px(c.x(az, outer)) << "\" y2=\"" << px(c.y(az, outer))
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }

  for (double ring : geometry.rings()) {
    svg << "  <text class=\"ring-label\" x=\"" << px(c.cx + 3.0) << "\" y=\"" << px(c.cy - ring * scale - 3.0)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444444\">" << format_roundtrip(ring)
        << "</text>\n";
  }

  static constexpr struct {
    double az;
    const char* name;
  } kCompass[] = {{0.0, "N"}, {90.0, "E"}, {180.0, "S"}, {270.0, "W"}};
  const double label_r = clip_r + kLabelGap / 2.0;
  for (const auto& p : kCompass) {
    svg << "  <text class=\"compass\" x=\"" << px(c.x(p.az, label_r)) << "\" y=\"" << px(c.y(p.az, label_r))
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << p.name << "</text>\n";
  }

  if (options.show_values) {
    for (std::size_t b = 0; b < rose.band_count(); ++b) {
      const double rc = sector_centroid_radius(geometry.band_lo(b), geometry.band_hi(b), classes.width_deg()) * scale;
      for (std::size_t j = 0; j < classes.count(); ++j) {
        const double az = classes.azimuth_deg(j);
        svg << "  <text class=\"cell-value\" x=\"" << px(c.x(az, rc)) << "\" y=\"" << px(c.y(az, rc))
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">"
            << format_fixed(rose.cell(b, j), options.decimals) << "</text>\n";
      }
    }
    svg << "  <text class=\"calm-value\" x=\"" << px(c.cx) << "\" y=\"" << px(c.cy)
        << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << format_fixed(rose.calm(), options.decimals) << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace windrose
