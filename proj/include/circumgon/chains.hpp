#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circumgon/geom.hpp"

namespace circumgon::chains {

// Composition of point reflections through m_1, ..., m_t in order. Point
// reflections are the maps q -> 2*m - q; their composition is q -> c + q for
// even t and q -> c - q for odd t, with c determined by the midpoints.
struct ReflectionComposition {
  bool odd = false;
  geom::Point offset{};  // the constant c

  geom::Point apply(geom::Point q) const {
    return odd ? offset - q : offset + q;
  }
  // Preimage of q under the composition; a point reflection is an involution,
  // so for odd compositions invert == apply.
  geom::Point invert(geom::Point q) const {
    return odd ? offset - q : q - offset;
  }
  // Image of an oriented line. Orientation flips under odd compositions
  // (rotation by pi), is preserved under even ones (translation).
  geom::Line map_line(const geom::Line& l) const;
};

ReflectionComposition compose_reflections(std::span<const geom::Point> midpoints);

// q_0 = start, q_j = 2*midpoints[j-1] - q_{j-1}; returns q_0, ..., q_t.
std::vector<geom::Point> chain_from_start(geom::Point start,
                                          std::span<const geom::Point> midpoints);

enum class ChainStatus { kUnique, kFamily, kNoSolution };

struct MidpointChain {
  ChainStatus status = ChainStatus::kNoSolution;
  // For a closed chain: q_0, ..., q_{n-1}, q_n == q_0 (n+1 entries).
  // For an open chain: q_0, ..., q_t with q_0 on the start line and q_t on
  // the end line.
  std::vector<geom::Point> vertices;
  std::vector<geom::Point> midpoints;
  bool closed = false;
  // Signed area of the closed chain (shoelace over q_0..q_{n-1}); constant
  // across a family. Unset for open chains.
  double signed_area = 0.0;
};

// Closed chain around poly: q_j is the vertex of the chain that precedes the
// chain side with midpoint vertex(j), i.e. q_1 = 2*vertex(0) - q_0. For odd n
// the chain is unique; for even n a translation-free composition yields a
// family (kFamily; pass `start` to select a member, otherwise the chain
// starting at the polygon centroid is returned) and a nonzero offset yields
// kNoSolution.
MidpointChain closed_chain(const geom::ConvexPolygon& poly,
                           std::optional<geom::Point> start = std::nullopt,
                           double eps = kEpsGeom);

// Open chain from line_a to line_b through the given midpoints: q_0 lies on
// line_a, each midpoint is reflected through in turn, and the final vertex
// must land on line_b. Unique when the image of line_a meets line_b in one
// point; a one-parameter family when they coincide (pass `start` on line_a to
// select a member, otherwise anchor_a is used); no solution when parallel and
// disjoint. anchor_a/anchor_b are reference points used for the family
// representative and for tolerance scaling.
MidpointChain open_chain(const geom::Line& line_a, geom::Point anchor_a,
                         std::span<const geom::Point> midpoints,
                         const geom::Line& line_b, geom::Point anchor_b,
                         std::optional<geom::Point> start = std::nullopt,
                         double eps = kEpsGeom);

// Every chain vertex q_k must lie in the external region of side
// (first_side + k) mod n. For closed chains pass the full n-vertex cycle
// (the closing duplicate is ignored).
bool chain_feasible(std::span<const geom::Point> chain, const geom::ConvexPolygon& poly,
                    int first_side, double tol);

// Clip a convex region (counterclockwise) by eval(p) >= -tol; returns the
// clipped region, possibly empty.
std::vector<geom::Point> clip_by_halfplane(std::vector<geom::Point> region,
                                           const geom::Line& l, double tol);

// Valid start points q_0 for a closed chain around an even-gon: the set of
// q_0 whose full chain stays inside the external regions. Empty when no
// circumscribed polygon avoids touching every side, or when the composition
// has a nonzero offset. The region is intersected with a bounding box a few
// diameters across, which is large enough because feasible starts lie in the
// external region of the last side.
std::vector<geom::Point> all_n_feasible_region(const geom::ConvexPolygon& poly,
                                               double eps = kEpsGeom);

}  // namespace circumgon::chains
