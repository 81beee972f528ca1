#pragma once

namespace circumgon {

// Default tolerances. Geometry is rescaled to unit diameter before any
// tolerance is applied, so these are dimensionless.
inline constexpr double kEpsGeom = 1e-9;   // distances, halfplane slack
inline constexpr double kEpsAngle = 1e-9;  // angle sums (radians)
inline constexpr double kTieTol = 1e-12;   // relative tie window for equal-area optima

struct Config {
  double eps_geom = kEpsGeom;
  double eps_angle = kEpsAngle;
  double tie_tol = kTieTol;
  int enum_limit = 20;     // refuse brute-force enumeration beyond 2^enum_limit patterns
  bool parallel = false;   // opt in to the OpenMP kernels; serial reference is the default
};

}  // namespace circumgon
