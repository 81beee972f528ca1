#pragma once

#include <string>
#include <vector>

#include "circumgon/chains.hpp"
#include "circumgon/slots.hpp"

namespace circumgon::solver {

// Streamed evaluation of one span: slots i and i+k are used as sides, the
// slots strictly between them are not, and the boundary there is replaced by
// a midpoint chain. `gain` is the signed area added over the base region by
// the loop anchor(i..) -> chain -> anchor(..i+k) -> reversed interior joints.
struct SpanEval {
  bool feasible = false;
  bool family = false;
  double gain = 0.0;
};

SpanEval eval_span(const SlotList& slots, int i, int k, const Config& cfg);

// The chain vertices the span contributes to the assembled polygon, in
// boundary order. A width-1 span contributes the single joint where the two
// used lines meet; wider spans contribute the k-1 midpoint-chain vertices.
// Only valid for spans that eval_span reports feasible.
std::vector<geom::Point> span_chain(const SlotList& slots, int i, int k, const Config& cfg);

inline constexpr int kSplitType0 = -1;  // span solved by a single chain
inline constexpr int kSplitNone = -2;   // infeasible / not computed

struct DpTable {
  int n = 0;
  std::vector<double> gain;  // (n) x (n+1), index [i*(n+1) + k]
  std::vector<int> split;    // best split offset alpha, or kSplitType0/kSplitNone

  double gain_at(int i, int k) const { return gain[static_cast<size_t>(i) * (n + 1) + k]; }
  int split_at(int i, int k) const { return split[static_cast<size_t>(i) * (n + 1) + k]; }
};

// gain[i][k] = best extra area over the base region between used slot i and
// used slot i+k, maximizing over which of the slots strictly between are
// also used. Layer k depends only on layers < k, so cells within a layer are
// independent; cfg.parallel distributes them over OpenMP threads with
// bit-identical results.
DpTable dp_all_pairs(const SlotList& slots, const Config& cfg);

// The configuration in which no slot carries a side: a single closed
// midpoint chain around the whole boundary. Only plain polygon slot lists
// (nothing forced, no phantoms) admit it.
struct LooseFit {
  bool feasible = false;
  bool family = false;
  double area = 0.0;               // absolute enclosed area when feasible
  std::vector<geom::Point> chain;  // the enclosing polygon's vertices
};

LooseFit all_unused_fit(const SlotList& slots, const Config& cfg);

enum class VertexRole { kMidpoint, kOnUsedSide };

struct Solution {
  bool ok = false;
  geom::Validity verdict = geom::Validity::kOk;
  std::string message;  // failure reason when !ok

  geom::ConvexPolygon polygon;  // the enclosing polygon, input coordinates
  double area = 0.0;
  std::vector<bool> used;          // per slot: its line carries a side
  std::string un_sequence;         // per slot: 'U' used / 'N' not used
  std::vector<VertexRole> classification;  // see solve_anchored / solve_max_area
  bool family = false;             // optimum belongs to a one-parameter family
  std::vector<std::string> ties;   // equal-area U/N patterns when enumerated
};

// Solve over a slot list. `anchor` picks a slot that is treated as used; -1
// means: try every anchor and also the configuration using no slot at all
// (only meaningful when nothing is forced). classification[i] describes
// joint(i). Forced slots are honoured in every configuration considered.
Solution solve_anchored(const SlotList& slots, const Config& cfg, int anchor = -1,
                        bool enumerate_ties = false);

// Maximum-area polygon containing poly. classification[j] describes input
// vertex j. On validation failure returns ok == false with the verdict set.
Solution solve_max_area(const geom::ConvexPolygon& poly, const Config& cfg = {},
                        bool enumerate_ties = false);

// Lexicographically smallest representative of the U/N pattern under
// rotation and reflection (the symmetries that relabel slots).
std::string canonical_pattern(const std::string& s);
bool same_pattern_orbit(const std::string& a, const std::string& b);

}  // namespace circumgon::solver
