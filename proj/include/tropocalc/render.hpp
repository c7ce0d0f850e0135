#pragma once

#include <span>
#include <string>

#include "tropocalc/cycles.hpp"
#include "tropocalc/rational.hpp"

namespace tropo {

/// Display settings for the SVG renderer. Rays are cut off `ray_extent`
/// lattice units from their start; the y axis points up.
struct RenderSpec {
  Point2 low;   // lower-left corner of the viewport
  Point2 high;  // upper-right corner
  Rational ray_extent{1};
  double pixels = 600;      // size of the longer viewport side
  double stroke = 1.5;      // stroke width of a weight-1 edge
  bool labels = true;       // print weights >= 2 and marked-point weights
};

/// Viewport around every vertex and marked point, padded so that the stubs of
/// rays stay visible.
RenderSpec fit_render_spec(std::span<const Cycle1> curves, const ZeroCycle* marks = nullptr);

/// Planar cycles drawn in distinct colours, with edges of weight >= 2 in bold,
/// and marked points sized by weight. Throws InvalidArgument when the
/// viewport misses a vertex or ray_extent <= 0, AmbientDimUnsupported for
/// non-planar cycles.
std::string render_svg(std::span<const Cycle1> curves, const ZeroCycle* marks,
                       const RenderSpec& spec);

}  // namespace tropo
