#include "circumgon/gini.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace circumgon::gini {

using geom::Line;
using geom::Point;
using solver::Slot;
using solver::SlotKind;
using solver::SlotList;

LorenzData lorenz_from_points(std::vector<Point> pts, double eps) {
  int m = static_cast<int>(pts.size());
  if (m < 2) throw LorenzError(LorenzFault::kParse, "need at least two points");

  for (int i = 0; i < m; ++i) {
    const Point& pt = pts[i];
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || pt.x < -eps || pt.x > 1.0 + eps ||
        pt.y < -eps || pt.y > 1.0 + eps)
      throw LorenzError(LorenzFault::kBadRange,
                        "BAD_RANGE: point " + std::to_string(i) + " outside the unit square",
                        {i});
  }
  if (std::abs(pts.front().x) > eps || std::abs(pts.front().y) > eps)
    throw LorenzError(LorenzFault::kBadRange, "BAD_RANGE: first point must be (0,0)", {0});
  if (std::abs(pts.back().x - 1.0) > eps || std::abs(pts.back().y - 1.0) > eps)
    throw LorenzError(LorenzFault::kBadRange, "BAD_RANGE: last point must be (1,1)", {m - 1});

  for (int i = 0; i + 1 < m; ++i) {
    double dp = pts[i + 1].x - pts[i].x;
    if (dp < -eps)
      throw LorenzError(LorenzFault::kNotMonotone,
                        "NOT_MONOTONE: p decreases at point " + std::to_string(i + 1), {i + 1});
    if (dp <= eps)
      throw LorenzError(LorenzFault::kDuplicateP,
                        "DUPLICATE_P: duplicate p at point " + std::to_string(i + 1), {i + 1});
    if (pts[i + 1].y - pts[i].y < -eps)
      throw LorenzError(LorenzFault::kNotMonotone,
                        "NOT_MONOTONE: L decreases at point " + std::to_string(i + 1), {i + 1});
  }

  LorenzData data;
  data.collinear.assign(m, false);
  std::vector<int> concave;
  for (int i = 1; i + 1 < m; ++i) {
    double cr = geom::cross(pts[i] - pts[i - 1], pts[i + 1] - pts[i]);
    if (cr < -eps)
      concave.push_back(i);
    else if (cr <= eps)
      data.collinear[i] = true;
  }
  if (!concave.empty()) {
    std::string what = "NOT_CONVEX: slopes decrease at point(s)";
    for (int i : concave) what += " " + std::to_string(i);
    throw LorenzError(LorenzFault::kNotConvex, what, concave);
  }

  // Snap into the exact unit square now that validation passed.
  for (Point& pt : pts) {
    pt.x = std::clamp(pt.x, 0.0, 1.0);
    pt.y = std::clamp(pt.y, 0.0, 1.0);
  }
  pts.front() = {0.0, 0.0};
  pts.back() = {1.0, 1.0};
  data.points = std::move(pts);
  return data;
}

LorenzData parse_lorenz(std::string_view csv, bool add_endpoints, double eps) {
  std::vector<Point> pts;
  int lineno = 0;
  size_t pos = 0;
  bool first_content = true;
  while (pos <= csv.size()) {
    size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;

    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    if (line.empty()) {
      if (pos > csv.size()) break;
      continue;
    }

    if (first_content) {
      first_content = false;
      // A header row ("p,L", "percent, cumulative share", ...) is recognized
      // by its first field not even starting with a number; a malformed data
      // line still starts numeric and falls through to the strict parse.
      size_t head_end = std::min(line.find(','), line.size());
      std::string_view head = line.substr(0, head_end);
      while (!head.empty() && is_space(head.front())) head.remove_prefix(1);
      double probe = 0.0;
      auto [hp, hec] = std::from_chars(head.data(), head.data() + head.size(), probe);
      (void)hp;
      if (hec == std::errc::invalid_argument) continue;  // header row
    }

    size_t comma = line.find(',');
    if (comma == std::string_view::npos)
      throw LorenzError(LorenzFault::kParse, "line " + std::to_string(lineno) + ": expected p,L");
    auto parse_field = [&](std::string_view f) {
      while (!f.empty() && is_space(f.front())) f.remove_prefix(1);
      while (!f.empty() && is_space(f.back())) f.remove_suffix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size())
        throw LorenzError(LorenzFault::kParse,
                          "line " + std::to_string(lineno) + ": bad number '" +
                              std::string(f) + "'");
      return v;
    };
    double p = parse_field(line.substr(0, comma));
    double l = parse_field(line.substr(comma + 1));
    pts.push_back({p, l});
    if (pos > csv.size()) break;
  }

  if (add_endpoints) {
    if (pts.empty() || geom::dist(pts.front(), {0.0, 0.0}) > eps)
      pts.insert(pts.begin(), {0.0, 0.0});
    if (geom::dist(pts.back(), {1.0, 1.0}) > eps) pts.push_back({1.0, 1.0});
  }
  return lorenz_from_points(std::move(pts), eps);
}

double gini_lower(const LorenzData& data) {
  // 1 - 2 * (area under the curve), by trapezoids.
  double below = 0.0;
  for (size_t i = 0; i + 1 < data.points.size(); ++i)
    below += (data.points[i + 1].x - data.points[i].x) *
             (data.points[i].y + data.points[i + 1].y) * 0.5;
  return 1.0 - 2.0 * below;
}

SlotList build_lorenz_slots(const LorenzData& data, double eps) {
  const std::vector<Point>& pts = data.points;
  int m = static_cast<int>(pts.size()) - 1;  // segments
  bool flat_start = pts[1].y <= eps;

  std::vector<Slot> slots;
  slots.reserve(m + 4);

  Slot left;
  left.line = Line::through({0.0, 1.0}, {0.0, 0.0});
  left.anchor_start = {0.0, 1.0};
  left.anchor_end = {0.0, 0.0};
  left.forced = true;
  slots.push_back(left);

  if (!flat_start) {
    Slot bottom;
    bottom.line = Line::through({0.0, 0.0}, {1.0, 0.0});
    bottom.anchor_start = bottom.anchor_end = {0.0, 0.0};
    bottom.kind = SlotKind::kPhantom;
    slots.push_back(bottom);
  }

  for (int j = 0; j < m; ++j) {
    Slot seg;
    seg.line = Line::through(pts[j], pts[j + 1]);
    seg.anchor_start = pts[j];
    seg.anchor_end = pts[j + 1];
    seg.forced = data.collinear[j] || data.collinear[j + 1] || (flat_start && j == 0);
    slots.push_back(seg);
  }

  Slot right;
  right.line = Line::through({1.0, 0.0}, {1.0, 1.0});
  right.anchor_start = right.anchor_end = {1.0, 1.0};
  right.kind = SlotKind::kPhantom;
  slots.push_back(right);

  Slot top;
  top.line = Line::through({1.0, 1.0}, {0.0, 1.0});
  top.anchor_start = {1.0, 1.0};
  top.anchor_end = {0.0, 1.0};
  top.forced = true;
  slots.push_back(top);

  return SlotList::make(std::move(slots), eps);
}

GiniBounds gini_bounds(const LorenzData& data, const Config& cfg) {
  GiniBounds gb;
  gb.lower = gini_lower(data);
  gb.lower_chain = data.points;

  SlotList slots = build_lorenz_slots(data, cfg.eps_geom);
  solver::Solution sol = solver::solve_anchored(slots, cfg);
  if (!sol.ok) throw std::runtime_error("upper-bound solve failed: " + sol.message);
  gb.upper = 2.0 * sol.area - 1.0;

  // Boundary from (0,0) counterclockwise to (1,1) is the attaining curve.
  const std::vector<Point>& qv = sol.polygon.vertices();
  int nq = static_cast<int>(qv.size());
  int i00 = 0, i11 = 0;
  for (int i = 1; i < nq; ++i) {
    if (geom::dist(qv[i], {0.0, 0.0}) < geom::dist(qv[i00], {0.0, 0.0})) i00 = i;
    if (geom::dist(qv[i], {1.0, 1.0}) < geom::dist(qv[i11], {1.0, 1.0})) i11 = i;
  }
  if (geom::dist(qv[i00], {0.0, 0.0}) > 1e-6 || geom::dist(qv[i11], {1.0, 1.0}) > 1e-6)
    throw std::runtime_error("upper-bound polygon misses a unit-square corner");
  for (int i = i00;; i = (i + 1) % nq) {
    gb.upper_chain.push_back(qv[i]);
    if (i == i11) break;
  }
  gb.upper_chain.front() = {0.0, 0.0};
  gb.upper_chain.back() = {1.0, 1.0};

  int m = static_cast<int>(data.points.size()) - 1;
  bool flat_start = data.points[1].y <= cfg.eps_geom;
  int seg0 = flat_start ? 1 : 2;  // slots: left, [bottom phantom], segments...
  gb.pattern.assign(static_cast<size_t>(m), 'N');
  for (int j = 0; j < m; ++j)
    if (sol.used[seg0 + j]) gb.pattern[j] = 'U';
  // The phantom flags report whether the attaining curve actually rides the
  // bottom or right edge of the unit square. A tie in the search can mark a
  // phantom slot used with a zero-length edge; that does not count, so read
  // the shape of the chain instead of the slot flags.
  const double edge_tol = 1e-9;
  gb.phantom_bottom_used =
      !flat_start && gb.upper_chain.size() >= 2 && gb.upper_chain[1].y <= edge_tol;
  gb.phantom_right_used = gb.upper_chain.size() >= 2 &&
                          gb.upper_chain[gb.upper_chain.size() - 2].x >= 1.0 - edge_tol;
  return gb;
}

LorenzData farris_example(int n) {
  if (n < 12 || n % 8 != 4)
    throw std::invalid_argument("farris example needs n >= 12 with n = 4 (mod 8)");
  int m = n / 4;
  std::vector<Point> pts(m + 1);
  for (int k = 0; k <= m; ++k) {
    double a = -std::numbers::pi / 2 + 2.0 * std::numbers::pi * k / n;
    pts[k] = {std::cos(a), 1.0 + std::sin(a)};
  }
  pts.front() = {0.0, 0.0};
  pts.back() = {1.0, 1.0};
  return lorenz_from_points(std::move(pts));
}

}  // namespace circumgon::gini
