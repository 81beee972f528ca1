#pragma once

#include <vector>

#include "circumgon/geom.hpp"

namespace circumgon::solver {

enum class SlotKind { kReal, kPhantom };

// One boundary slot of the generalized input: an oriented support line with
// the interior on its positive side, and the anchor segment the input
// contributes on that line (a single point for phantom slots).
struct Slot {
  geom::Line line;
  geom::Point anchor_start;
  geom::Point anchor_end;
  SlotKind kind = SlotKind::kReal;
  bool forced = false;  // the enclosing polygon must use this line as a side
};

// Cyclic sequence of slots whose anchors chain up: anchor_end of slot i is
// anchor_start of slot i+1 (the joint). The joints traverse the input
// boundary counterclockwise.
class SlotList {
 public:
  SlotList() = default;

  // Validates anchor chaining, anchors-on-line, and turning; throws
  // std::invalid_argument on failure.
  static SlotList make(std::vector<Slot> slots, double eps = kEpsGeom);
  static SlotList from_polygon(const geom::ConvexPolygon& poly, double eps = kEpsGeom);

  int size() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int i) const { return slots_[wrap(i)]; }
  const std::vector<Slot>& slots() const { return slots_; }

  // Shared anchor of slot i and slot i+1.
  geom::Point joint(int i) const { return slots_[wrap(i)].anchor_end; }

  double base_area() const { return base_area_; }  // shoelace over the joints
  double scale() const { return scale_; }          // diameter of the joint set

  bool any_forced() const;
  int first_forced() const;  // -1 when none

  // Joints reindexed so that slot j runs from vertex j to vertex j+1; only
  // valid for slot lists with no phantom slots.
  geom::ConvexPolygon boundary_polygon(double eps = kEpsGeom) const;

 private:
  int wrap(int i) const {
    int n = size();
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  std::vector<Slot> slots_;
  double base_area_ = 0.0;
  double scale_ = 0.0;
};

// Translate by -center then scale by 1/s (s > 0): anchors map to
// (p - center)/s, lines keep their unit normals.
SlotList normalized_slots(const SlotList& in, geom::Point center, double s);

}  // namespace circumgon::solver
