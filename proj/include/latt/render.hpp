#pragma once

#include <string>

#include "latt/schedule.hpp"
#include "latt/tiling.hpp"

namespace latt {

// Draws every window point's Voronoi cell under the optional geometric
// embedding (identity when absent), fills by prototile, strokes heavy
// outlines between distinct tile instances, and labels each cell with its
// slot number when a schedule is given. 2-d only; output is byte-stable for
// a fixed input.
std::string render_svg(const PeriodicTiling& t, const Schedule* sched,
                       const Box& window, const GeometricBasis* geom);

}  // namespace latt
