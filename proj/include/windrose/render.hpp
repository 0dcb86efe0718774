#pragma once

#include <optional>
#include <string>

#include "windrose/geometry.hpp"
#include "windrose/rose.hpp"

namespace windrose {

struct RenderOptions {
  int canvas_px = 800;  // square canvas
  double outer_ring_px = 350.0;
  std::optional<Strip> strip;
  bool show_values = false;
  int decimals = 2;
};

/// Minimum canvas for the outer ring, the strip margin and compass labels.
int min_canvas_px(double outer_ring_px);

/// SVG 1.1 wind rose, north up and azimuths clockwise. Output depends only
/// on the arguments. Errors: kBadOptions, plus rose validation errors.
std::string render_rose_svg(const WindRose& rose, const RenderOptions& options = {});

}  // namespace windrose
