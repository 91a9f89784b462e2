#pragma once

#include "pgrowth/rays.hpp"

#include <string>
#include <vector>

namespace pgrowth {

struct SvgOptions {
  int size = 800;            ///< Width and height in pixels.
  double extent = 2.5;       ///< Half-width of the plotted square in the plane.
  unsigned cloud_points = 20000;
  unsigned seed = 1;
};

/// SVG 1.1 figure: an inverse-iteration point cloud of the Julia set and the
/// given ray polylines with their landing points.
std::string render_svg(const UnicriticalMap& m, const std::vector<RayTrace>& rays,
                       const SvgOptions& opt = {});

}  // namespace pgrowth
