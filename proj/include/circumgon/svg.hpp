#pragma once

#include <string>

#include "circumgon/gini.hpp"
#include "circumgon/solver.hpp"

namespace circumgon::io {

// Input polygon, its bounded external regions, and the solution polygon,
// one <g id="..."> layer each.
std::string polygon_scene_svg(const geom::ConvexPolygon& input, const solver::Solution& sol);

// Unit square, equality diagonal, data curve, and upper-bound curve.
std::string gini_scene_svg(const gini::LorenzData& data, const gini::GiniBounds& gb);

}  // namespace circumgon::io
