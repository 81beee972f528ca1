#include "circumgon/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circumgon::geom {

double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p) { return std::hypot(p.x, p.y); }
double dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

Line Line::through(Point p, Point q) {
  double dx = q.x - p.x;
  double dy = q.y - p.y;
  double len = std::hypot(dx, dy);
  if (len == 0.0) throw std::invalid_argument("line through coincident points");
  // Left normal of p -> q.
  Line l;
  l.a = -dy / len;
  l.b = dx / len;
  l.c = l.a * p.x + l.b * p.y;
  return l;
}

bool same_oriented_line(const Line& l1, const Line& l2, double eps) {
  return std::abs(l1.a - l2.a) <= eps && std::abs(l1.b - l2.b) <= eps &&
         std::abs(l1.c - l2.c) <= eps;
}

LineIntersection intersect_lines(const Line& l1, const Line& l2, double eps) {
  // Normals are unit vectors, so det equals the sine of the angle between
  // the lines.
  double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) <= eps) {
    double gap = std::abs(l1.eval(l2.some_point()));
    return {gap <= eps ? LineRelation::kCoincident : LineRelation::kParallelDisjoint, {}};
  }
  Point p{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
  return {LineRelation::kPoint, p};
}

double signed_area(std::span<const Point> pts) {
  size_t n = pts.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % n];
    s += p.x * q.y - p.y * q.x;
  }
  return 0.5 * s;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vs, double eps) {
  int n = static_cast<int>(vs.size());
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");

  double dia = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dia = std::max(dia, dist(vs[i], vs[j]));
  if (dia <= 0.0) throw std::invalid_argument("polygon is a single point");

  double dist_tol = eps * dia;
  double turn_tol = eps * dia * dia;
  for (int i = 0; i < n; ++i) {
    if (dist(vs[i], vs[(i + 1) % n]) <= dist_tol)
      throw std::invalid_argument("repeated vertex at index " + std::to_string(i));
    Point u = vs[(i + 1) % n] - vs[i];
    Point w = vs[(i + 2) % n] - vs[(i + 1) % n];
    if (cross(u, w) <= turn_tol)
      throw std::invalid_argument("vertices not strictly convex counterclockwise at index " +
                                  std::to_string((i + 1) % n));
  }

  ConvexPolygon poly;
  poly.v_ = std::move(vs);
  poly.diameter_ = dia;
  poly.area_ = signed_area(poly.v_);

  // Area centroid.
  double cx = 0.0, cy = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point& p = poly.v_[i];
    const Point& q = poly.v_[(i + 1) % n];
    double w = p.x * q.y - p.y * q.x;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  poly.centroid_ = {cx / (6.0 * poly.area_), cy / (6.0 * poly.area_)};
  return poly;
}

Line ConvexPolygon::sideline(int i) const { return Line::through(vertex(i), vertex(i + 1)); }

double ConvexPolygon::interior_angle(int i) const {
  Point u = vertex(i - 1) - vertex(i);
  Point w = vertex(i + 1) - vertex(i);
  double cosv = dot(u, w) / (norm(u) * norm(w));
  cosv = std::clamp(cosv, -1.0, 1.0);
  return std::acos(cosv);
}

ExternalRegion external_region(const ConvexPolygon& poly, int side, double eps_angle) {
  ExternalRegion r;
  r.base = poly.sideline(side);
  r.prev = poly.sideline(side - 1);
  r.next = poly.sideline(side + 1);
  r.corner_start = poly.vertex(side);
  r.corner_end = poly.vertex(side + 1);

  double angle_sum = poly.interior_angle(side) + poly.interior_angle(side + 1);
  r.bounded = angle_sum > std::numbers::pi + eps_angle;
  if (r.bounded) {
    auto hit = intersect_lines(r.prev, r.next);
    if (hit.relation == LineRelation::kPoint) {
      r.apex = hit.point;
      r.area = std::abs(signed_area(std::vector<Point>{r.corner_start, r.corner_end, r.apex}));
    } else {
      r.bounded = false;  // numerically parallel after all
    }
  }
  return r;
}

ValidationReport validate_input(const ConvexPolygon& poly, double eps_angle) {
  int n = poly.size();
  int fail_count = 0;
  int first_fail = -1;
  for (int i = 0; i < n; ++i) {
    double s = poly.interior_angle(i) + poly.interior_angle(i + 1);
    if (s <= std::numbers::pi + eps_angle) {
      ++fail_count;
      if (first_fail < 0) first_fail = i;
    }
  }
  if (fail_count == n) {
    // Parallelogram-like input: every external region degenerates, the area
    // of circumscribed polygons is unbounded.
    return {Validity::kUnbounded,
            "UNBOUNDED: adjacent interior angles never sum to more than pi", first_fail};
  }
  if (n < 5)
    return {Validity::kTooFewVertices,
            "TOO_FEW_VERTICES: need at least 5 vertices, got " + std::to_string(n), -1};
  if (fail_count > 0)
    return {Validity::kUnbounded,
            "UNBOUNDED: interior angles at side " + std::to_string(first_fail) +
                " sum to at most pi",
            first_fail};
  return {};
}

bool point_on_boundary(const ConvexPolygon& poly, Point p, double tol) {
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    Point a = poly.vertex(i);
    Point b = poly.vertex(i + 1);
    Point ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    if (dist(p, a + t * ab) <= tol) return true;
  }
  return false;
}

bool polygon_contains(const ConvexPolygon& poly, Point p, double tol) {
  int n = poly.size();
  for (int i = 0; i < n; ++i)
    if (poly.sideline(i).eval(p) < -tol) return false;
  return true;
}

}  // namespace circumgon::geom
