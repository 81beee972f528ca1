#include "circumgon/chains.hpp"

#include <algorithm>
#include <cmath>

namespace circumgon::chains {

using geom::Line;
using geom::Point;

Line ReflectionComposition::map_line(const Line& l) const {
  Point p = l.some_point();
  Point q = p + l.direction();
  return Line::through(apply(p), apply(q));
}

ReflectionComposition compose_reflections(std::span<const Point> midpoints) {
  ReflectionComposition r;
  for (const Point& m : midpoints) {
    // (q -> 2m - q) after (q -> c +/- q) is q -> (2m - c) -/+ q.
    r.offset = 2.0 * m - r.offset;
    r.odd = !r.odd;
  }
  return r;
}

std::vector<Point> chain_from_start(Point start, std::span<const Point> midpoints) {
  std::vector<Point> chain;
  chain.reserve(midpoints.size() + 1);
  chain.push_back(start);
  Point q = start;
  for (const Point& m : midpoints) {
    q = 2.0 * m - q;
    chain.push_back(q);
  }
  return chain;
}

MidpointChain closed_chain(const geom::ConvexPolygon& poly, std::optional<Point> start,
                           double eps) {
  int n = poly.size();
  MidpointChain out;
  out.midpoints = poly.vertices();
  out.closed = true;

  ReflectionComposition r = compose_reflections(out.midpoints);
  if (r.odd) {
    // q -> c - q has the unique fixed point c/2.
    Point q0 = 0.5 * r.offset;
    out.status = ChainStatus::kUnique;
    out.vertices = chain_from_start(q0, out.midpoints);
  } else {
    if (geom::norm(r.offset) > eps * poly.diameter()) {
      out.status = ChainStatus::kNoSolution;
      return out;
    }
    // Pure translation by ~0: every start closes up, a one-parameter family
    // (two-parameter as a set of starts; one up to the constraints that
    // matter). Area is independent of the start.
    Point q0 = start.value_or(poly.centroid());
    out.status = ChainStatus::kFamily;
    out.vertices = chain_from_start(q0, out.midpoints);
    out.vertices.back() = out.vertices.front();  // snap the closing vertex
  }
  out.signed_area =
      geom::signed_area(std::span<const Point>(out.vertices.data(), static_cast<size_t>(n)));
  return out;
}

MidpointChain open_chain(const Line& line_a, Point anchor_a, std::span<const Point> midpoints,
                         const Line& line_b, Point anchor_b, std::optional<Point> start,
                         double eps) {
  MidpointChain out;
  out.midpoints.assign(midpoints.begin(), midpoints.end());
  out.closed = false;

  double scale = std::max(1e-12, geom::dist(anchor_a, anchor_b));
  for (const Point& m : midpoints) scale = std::max(scale, geom::dist(anchor_a, m));

  ReflectionComposition r = compose_reflections(midpoints);
  Line image = r.map_line(line_a);

  double det = image.a * line_b.b - line_b.a * image.b;
  if (std::abs(det) > eps) {
    // The image of line_a crosses line_b: the last chain vertex is the
    // crossing, the first is its preimage.
    Point qt{(image.c * line_b.b - line_b.c * image.b) / det,
             (image.a * line_b.c - line_b.a * image.c) / det};
    out.status = ChainStatus::kUnique;
    out.vertices = chain_from_start(r.invert(qt), midpoints);
    return out;
  }

  double gap = std::abs(line_b.eval(image.some_point()));
  if (gap > eps * scale) {
    out.status = ChainStatus::kNoSolution;
    return out;
  }

  // Image of line_a coincides with line_b: every start on line_a works.
  Point q0 = start.value_or(anchor_a);
  out.status = ChainStatus::kFamily;
  out.vertices = chain_from_start(q0, midpoints);
  return out;
}

bool chain_feasible(std::span<const Point> chain, const geom::ConvexPolygon& poly,
                    int first_side, double tol) {
  size_t m = chain.size();
  if (m == 0) return false;
  if (m > 1 && geom::dist(chain.front(), chain.back()) <= tol) --m;  // closed cycle
  for (size_t k = 0; k < m; ++k) {
    geom::ExternalRegion reg = geom::external_region(poly, first_side + static_cast<int>(k));
    if (!reg.contains(chain[k], tol)) return false;
  }
  return true;
}

std::vector<Point> clip_by_halfplane(std::vector<Point> region, const Line& l, double tol) {
  std::vector<Point> out;
  size_t n = region.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (size_t i = 0; i < n; ++i) {
    const Point& cur = region[i];
    const Point& nxt = region[(i + 1) % n];
    double ec = l.eval(cur);
    double en = l.eval(nxt);
    bool cin = ec >= -tol;
    bool nin = en >= -tol;
    if (cin) out.push_back(cur);
    if (cin != nin) {
      double t = ec / (ec - en);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

std::vector<Point> all_n_feasible_region(const geom::ConvexPolygon& poly, double eps) {
  int n = poly.size();
  const std::vector<Point>& vs = poly.vertices();
  double dia = poly.diameter();

  ReflectionComposition r = compose_reflections(vs);
  if (r.odd) {
    // Unique chain; report its start as a degenerate region when feasible.
    Point q0 = 0.5 * r.offset;
    std::vector<Point> chain = chain_from_start(q0, vs);
    if (chain_feasible(chain, poly, n - 1, eps * dia)) return {q0, q0, q0};
    return {};
  }
  if (geom::norm(r.offset) > eps * dia) return {};

  // Start from a box covering the polygon and every bounded external apex,
  // with a diameter of margin; all feasible starts lie inside it.
  std::vector<geom::ExternalRegion> regions;
  regions.reserve(n);
  double lox = vs[0].x, hix = vs[0].x, loy = vs[0].y, hiy = vs[0].y;
  auto grow = [&](Point p) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loy = std::min(loy, p.y);
    hiy = std::max(hiy, p.y);
  };
  for (const Point& p : vs) grow(p);
  for (int i = 0; i < n; ++i) {
    regions.push_back(geom::external_region(poly, i));
    if (regions.back().bounded) grow(regions.back().apex);
  }
  double margin = dia + std::max(hix - lox, hiy - loy);
  std::vector<Point> region{{lox - margin, loy - margin},
                            {hix + margin, loy - margin},
                            {hix + margin, hiy + margin},
                            {lox - margin, hiy + margin}};

  // q_j = base_j + (-1)^j q_0; each halfplane condition on q_j becomes a
  // halfplane in q_0. Clip without slack so a degenerate region collapses.
  std::vector<Point> base = chain_from_start({0.0, 0.0}, vs);
  for (int j = 0; j < n && !region.empty(); ++j) {
    const geom::ExternalRegion& reg = regions[(j - 1 + n) % n];
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    // (line, keep positive side?) triples of the external region.
    const std::pair<const Line*, bool> conds[3] = {
        {&reg.base, false}, {&reg.prev, true}, {&reg.next, true}};
    for (auto [l, keep_pos] : conds) {
      double flip = keep_pos ? 1.0 : -1.0;
      Line q_line;
      q_line.a = flip * sign * l->a;
      q_line.b = flip * sign * l->b;
      q_line.c = -flip * l->eval(base[j]);
      region = clip_by_halfplane(std::move(region), q_line, 0.0);
    }
  }
  return region;
}

}  // namespace circumgon::chains
