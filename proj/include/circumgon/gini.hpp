#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circumgon/slots.hpp"
#include "circumgon/solver.hpp"

namespace circumgon::gini {

enum class LorenzFault { kParse, kBadRange, kDuplicateP, kNotMonotone, kNotConvex };

class LorenzError : public std::runtime_error {
 public:
  LorenzError(LorenzFault fault, const std::string& what, std::vector<int> indices = {})
      : std::runtime_error(what), fault(fault), indices(std::move(indices)) {}

  LorenzFault fault;
  std::vector<int> indices;  // offending point indices, when known
};

// Validated cumulative-share points: (p, L) from (0, 0) to (1, 1), p strictly
// increasing, L nondecreasing, slopes nondecreasing (convex).
struct LorenzData {
  std::vector<geom::Point> points;
  // collinear[i]: point i is interior to a straight run (its two incident
  // segments lie on one line). Such segments are pinned: any curve through
  // the points must contain them.
  std::vector<bool> collinear;
};

// Validates and returns the data; throws LorenzError otherwise.
LorenzData lorenz_from_points(std::vector<geom::Point> pts, double eps = kEpsGeom);

// CSV with two columns p,L (optional header line). add_endpoints prepends
// (0,0) and appends (1,1) when missing.
LorenzData parse_lorenz(std::string_view csv, bool add_endpoints = false,
                        double eps = kEpsGeom);

// Gini index of the piecewise-linear curve through the points; the sharp
// lower bound over all curves consistent with them.
double gini_lower(const LorenzData& data);

// Boundary slots of the region above the curve inside the unit square: the
// left edge and top edge (forced), one slot per data segment (forced only
// when pinned), and phantom slots at the bottom-left and right corners. When
// the first segment is flat (L stays 0) it already lies on the bottom edge:
// it is forced and the bottom phantom is dropped.
solver::SlotList build_lorenz_slots(const LorenzData& data, double eps = kEpsGeom);

struct GiniBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<geom::Point> lower_chain;  // the data curve itself
  std::vector<geom::Point> upper_chain;  // curve attaining the upper bound
  std::string pattern;                   // U/N per data segment in the optimum
  bool phantom_bottom_used = false;
  bool phantom_right_used = false;
};

// Sharp bounds: lower from the data curve, upper from the maximum-area
// region above a curve through all the points.
GiniBounds gini_bounds(const LorenzData& data, const Config& cfg = {});

// Circle-arc example with n/4 chords: points (cos a, 1 + sin a) for
// a = -pi/2 + 2*pi*k/n, k = 0..n/4. Requires n >= 12 and n = 4 (mod 8).
LorenzData farris_example(int n);

}  // namespace circumgon::gini
