#include "circumgon/slots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circumgon::solver {

using geom::Point;

SlotList SlotList::make(std::vector<Slot> slots, double eps) {
  int n = static_cast<int>(slots.size());
  if (n < 3) throw std::invalid_argument("slot list needs at least 3 slots");

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      scale = std::max(scale, geom::dist(slots[i].anchor_end, slots[j].anchor_end));
      scale = std::max(scale, geom::dist(slots[i].anchor_start, slots[j].anchor_start));
    }
  if (scale <= 0.0) throw std::invalid_argument("slot anchors are a single point");

  double dist_tol = eps * scale;
  double turn_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Slot& s = slots[i];
    const Slot& next = slots[(i + 1) % n];
    if (geom::dist(s.anchor_end, next.anchor_start) > dist_tol)
      throw std::invalid_argument("slot anchors do not chain at slot " + std::to_string(i));
    if (std::abs(s.line.eval(s.anchor_start)) > dist_tol ||
        std::abs(s.line.eval(s.anchor_end)) > dist_tol)
      throw std::invalid_argument("anchor off its line at slot " + std::to_string(i));
    if (s.kind == SlotKind::kReal && geom::dist(s.anchor_start, s.anchor_end) <= dist_tol)
      throw std::invalid_argument("real slot with degenerate anchor segment at " +
                                  std::to_string(i));
    if (s.kind == SlotKind::kPhantom && geom::dist(s.anchor_start, s.anchor_end) > dist_tol)
      throw std::invalid_argument("phantom slot with extended anchor segment at " +
                                  std::to_string(i));

    Point d1 = s.line.direction();
    Point d2 = next.line.direction();
    double turn = std::atan2(geom::cross(d1, d2), geom::dot(d1, d2));
    if (turn < -eps)
      throw std::invalid_argument("slot directions turn clockwise at slot " + std::to_string(i));
    if (std::abs(turn) <= eps) {
      // Collinear neighbours are legal only for coincident forced lines
      // (consecutive collinear input segments kept as separate slots).
      if (!(s.forced && next.forced) ||
          std::abs(next.line.eval(s.anchor_end)) > dist_tol)
        throw std::invalid_argument("parallel consecutive slots at slot " + std::to_string(i));
    }
    turn_sum += std::max(turn, 0.0);
  }
  if (std::abs(turn_sum - 2.0 * std::numbers::pi) > 1e-6)
    throw std::invalid_argument("slot directions do not make one full turn");

  SlotList out;
  out.slots_ = std::move(slots);
  out.scale_ = scale;
  std::vector<Point> joints;
  joints.reserve(n);
  for (const Slot& s : out.slots_) joints.push_back(s.anchor_end);
  out.base_area_ = geom::signed_area(joints);
  return out;
}

SlotList SlotList::from_polygon(const geom::ConvexPolygon& poly, double eps) {
  int n = poly.size();
  std::vector<Slot> slots(n);
  for (int i = 0; i < n; ++i) {
    slots[i].line = poly.sideline(i);
    slots[i].anchor_start = poly.vertex(i);
    slots[i].anchor_end = poly.vertex(i + 1);
    slots[i].kind = SlotKind::kReal;
    slots[i].forced = false;
  }
  return make(std::move(slots), eps);
}

bool SlotList::any_forced() const {
  return std::any_of(slots_.begin(), slots_.end(), [](const Slot& s) { return s.forced; });
}

int SlotList::first_forced() const {
  for (int i = 0; i < size(); ++i)
    if (slots_[i].forced) return i;
  return -1;
}

geom::ConvexPolygon SlotList::boundary_polygon(double eps) const {
  int n = size();
  std::vector<Point> vs(n);
  for (int j = 0; j < n; ++j) {
    if (slots_[j].kind != SlotKind::kReal)
      throw std::logic_error("boundary_polygon on a slot list with phantom slots");
    vs[j] = joint(j - 1 + n);
  }
  return geom::ConvexPolygon::from_vertices(std::move(vs), eps);
}

SlotList normalized_slots(const SlotList& in, Point center, double s) {
  std::vector<Slot> slots = in.slots();
  for (Slot& sl : slots) {
    sl.anchor_start = (1.0 / s) * (sl.anchor_start - center);
    sl.anchor_end = (1.0 / s) * (sl.anchor_end - center);
    // a*x + b*y = c becomes a*x' + b*y' = (c - a*cx - b*cy)/s.
    sl.line.c = (sl.line.c - sl.line.a * center.x - sl.line.b * center.y) / s;
  }
  return SlotList::make(std::move(slots));
}

}  // namespace circumgon::solver
