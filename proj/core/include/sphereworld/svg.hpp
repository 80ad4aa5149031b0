#pragma once

#include <string>

#include "sphereworld/path.hpp"
#include "sphereworld/scenario.hpp"

namespace sphereworld {

// Planar rendering: workspace circle, filled obstacles, dashed collar shell
// edges, puncture markers, one polyline per robot with start/goal glyphs.
// Deterministic output for a fixed input; throws unless the space is
// two-dimensional.
std::string render_svg(const Scenario& scenario, const PiecewisePath& path);

}  // namespace sphereworld
