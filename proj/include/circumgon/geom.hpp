#pragma once

#include <span>
#include <string>
#include <vector>

#include "circumgon/config.hpp"

namespace circumgon::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double dot(Point p, Point q);
double cross(Point p, Point q);
double norm(Point p);
double dist(Point p, Point q);

// Oriented line a*x + b*y = c with unit normal (a, b). The positive side of
// through(p, q) is the open halfplane to the LEFT of the direction p -> q,
// so for a counterclockwise polygon the interior is positive.
struct Line {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  // Throws std::invalid_argument if p and q coincide.
  static Line through(Point p, Point q);

  // Signed distance of p from the line (positive side > 0).
  double eval(Point p) const { return a * p.x + b * p.y - c; }

  // Unit vector along the line; the positive side lies to its left.
  Point direction() const { return {b, -a}; }

  // Foot of the perpendicular from the origin.
  Point some_point() const { return {a * c, b * c}; }
};

// True when the two lines are the same point set with the same orientation.
bool same_oriented_line(const Line& l1, const Line& l2, double eps = kEpsGeom);

enum class LineRelation { kPoint, kParallelDisjoint, kCoincident };

struct LineIntersection {
  LineRelation relation = LineRelation::kPoint;
  Point point{};  // valid only for kPoint
};

LineIntersection intersect_lines(const Line& l1, const Line& l2, double eps = kEpsGeom);

// Shoelace: positive for counterclockwise order.
double signed_area(std::span<const Point> pts);

// Strictly convex polygon in counterclockwise order. Construction validates
// and throws std::invalid_argument otherwise.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  static ConvexPolygon from_vertices(std::vector<Point> vs, double eps = kEpsGeom);

  int size() const { return static_cast<int>(v_.size()); }
  // Cyclic access: any integer index is reduced mod n.
  const Point& vertex(int i) const { return v_[wrap(i)]; }
  const std::vector<Point>& vertices() const { return v_; }

  double area() const { return area_; }
  double diameter() const { return diameter_; }
  Point centroid() const { return centroid_; }

  // Sideline of side i (vertex i -> vertex i+1), interior on the positive side.
  Line sideline(int i) const;
  // Interior angle at vertex i, in (0, pi).
  double interior_angle(int i) const;

 private:
  int wrap(int i) const {
    int n = size();
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  std::vector<Point> v_;
  double area_ = 0.0;
  double diameter_ = 0.0;
  Point centroid_{};
};

// Region cut off from side i by the two adjacent sidelines: bounded triangle
// when those sidelines meet on the outer side, unbounded wedge otherwise.
struct ExternalRegion {
  Line base;        // sideline of side i
  Line prev;        // sideline of side i-1
  Line next;        // sideline of side i+1
  bool bounded = false;
  Point apex{};     // intersection of prev and next when bounded
  double area = 0.0;  // triangle area when bounded, 0 otherwise
  Point corner_start{};  // vertex i
  Point corner_end{};    // vertex i+1

  // Closed region test: outside (or on) the base sideline, inside (or on)
  // both adjacent sidelines.
  bool contains(Point p, double tol = kEpsGeom) const {
    return base.eval(p) <= tol && prev.eval(p) >= -tol && next.eval(p) >= -tol;
  }
};

ExternalRegion external_region(const ConvexPolygon& poly, int side, double eps_angle = kEpsAngle);

enum class Validity { kOk, kTooFewVertices, kUnbounded };

struct ValidationReport {
  Validity verdict = Validity::kOk;
  std::string message;   // empty when ok
  int witness = -1;      // offending side index when unbounded
};

// A circumscribed polygon of maximum area exists iff every pair of interior
// angles at the ends of a side sums to more than pi. When every pair fails
// the input is reported unbounded even if it also has fewer than five
// vertices (a square fails this way); otherwise too-few-vertices wins.
ValidationReport validate_input(const ConvexPolygon& poly, double eps_angle = kEpsAngle);

// Distance from p to the boundary of poly is at most tol.
bool point_on_boundary(const ConvexPolygon& poly, Point p, double tol);
// p lies in the closed interior (all sideline evals >= -tol).
bool polygon_contains(const ConvexPolygon& poly, Point p, double tol);

}  // namespace circumgon::geom
