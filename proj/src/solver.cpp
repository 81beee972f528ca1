#include "circumgon/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace circumgon::solver {

using geom::Line;
using geom::Point;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Family parameters are clamped to this many (normalized) diameters; any
// feasible interval that matters lies well inside.
constexpr double kParamBox = 64.0;

// Containment region of slot j: on or outside slot j's line, on or inside
// the two neighbouring lines. A chain vertex facing slot j must lie here;
// the two inner conditions also force the correct ordering of the polygon
// corners along the used lines next to the span.
bool region_contains(const SlotList& slots, int j, Point p, double tol) {
  return slots.slot(j).line.eval(p) <= tol && slots.slot(j - 1 + slots.size()).line.eval(p) >= -tol &&
         slots.slot(j + 1).line.eval(p) >= -tol;
}

// Shoelace accumulator over a loop of points fed one at a time.
struct LoopArea {
  Point first{};
  Point prev{};
  bool started = false;
  double acc = 0.0;

  void feed(Point p) {
    if (!started) {
      first = prev = p;
      started = true;
      return;
    }
    acc += geom::cross(prev, p);
    prev = p;
  }
  double close() const { return started ? 0.5 * (acc + geom::cross(prev, first)) : 0.0; }
};

struct SpanOutcome {
  bool feasible = false;
  bool family = false;
  double gain = 0.0;
};

// Evaluate the span that uses slots i and i+k with everything strictly
// between unused. Walks the midpoint chain without allocating; when
// out_chain is non-null the contributed polygon corners are collected.
SpanOutcome span_impl(const SlotList& slots, int i, int k, const Config& cfg,
                      std::vector<Point>* out_chain) {
  SpanOutcome out;
  int n = slots.size();
  double tol = cfg.eps_geom;

  if (k == 1) {
    // Adjacent used slots: the joint between them is the polygon corner.
    out.feasible = true;
    if (out_chain) out_chain->push_back(slots.joint(i));
    return out;
  }

  const Line& la = slots.slot(i).line;
  const Line& lb = slots.slot(i + k).line;
  auto midpoint = [&](int r) { return slots.joint(i + 1 + r); };  // r = 0..k-3
  int chain_len = k - 1;  // chain vertices w_0..w_{k-2}

  // Composition of the point reflections through the k-2 interior joints.
  Point c{0.0, 0.0};
  bool odd = false;
  for (int r = 0; r + 2 < k; ++r) {
    c = 2.0 * midpoint(r) - c;
    odd = !odd;
  }
  auto apply = [&](Point q) { return odd ? c - q : c + q; };
  auto invert = [&](Point q) { return odd ? c - q : q - c; };

  Point pa = la.some_point();
  Line image = Line::through(apply(pa), apply(pa + la.direction()));

  double det = image.a * lb.b - lb.a * image.b;
  Point q0;
  if (std::abs(det) > cfg.eps_geom) {
    // Unique chain: last vertex is where the image of line a crosses line b.
    Point qt{(image.c * lb.b - lb.c * image.b) / det,
             (image.a * lb.c - lb.a * image.c) / det};
    q0 = invert(qt);
  } else {
    if (std::abs(lb.eval(image.some_point())) > tol) return out;  // parallel, disjoint

    // Coincident: one-parameter family q_0 = joint(i) + s * dir(a). Clip s
    // by every containment condition; all conditions are affine in s.
    Point d = la.direction();
    double lo = -kParamBox, hi = kParamBox;
    Point base = slots.joint(i);
    for (int r = 0; r < chain_len; ++r) {
      if (r > 0) base = 2.0 * midpoint(r - 1) - base;
      double sign = (r % 2 == 0) ? 1.0 : -1.0;
      int j = i + 1 + r;
      const Line* lines[3] = {&slots.slot(j).line, &slots.slot(j - 1 + n).line,
                              &slots.slot(j + 1).line};
      const double flips[3] = {-1.0, 1.0, 1.0};  // own line: <= tol; neighbours: >= -tol
      for (int t = 0; t < 3; ++t) {
        const Line& l = *lines[t];
        double g = flips[t] * l.eval(base);
        double h = flips[t] * sign * (l.a * d.x + l.b * d.y);
        if (std::abs(h) <= 1e-13) {
          if (g < -tol) return out;
        } else if (h > 0.0) {
          lo = std::max(lo, (-tol - g) / h);
        } else {
          hi = std::min(hi, (-tol - g) / h);
        }
      }
    }
    if (lo > hi) return out;
    out.family = true;
    q0 = slots.joint(i) + (0.5 * (lo + hi)) * d;
  }

  // Walk the chain, checking containment and accumulating the area gained
  // over the base boundary: anchor -> chain -> anchor -> interior joints
  // walked backwards.
  LoopArea loop;
  loop.feed(slots.joint(i));
  Point q = q0;
  for (int r = 0; r < chain_len; ++r) {
    if (r > 0) q = 2.0 * midpoint(r - 1) - q;
    if (!out.family && !region_contains(slots, i + 1 + r, q, tol)) return out;
    loop.feed(q);
    if (out_chain) out_chain->push_back(q);
  }
  loop.feed(slots.joint(i + k - 1));
  for (int r = k - 2; r >= 1; --r) loop.feed(slots.joint(i + r));
  out.gain = loop.close();
  out.feasible = true;
  return out;
}

}  // namespace

SpanEval eval_span(const SlotList& slots, int i, int k, const Config& cfg) {
  SpanOutcome o = span_impl(slots, i, k, cfg, nullptr);
  return {o.feasible, o.family, o.gain};
}

std::vector<Point> span_chain(const SlotList& slots, int i, int k, const Config& cfg) {
  std::vector<Point> chain;
  SpanOutcome o = span_impl(slots, i, k, cfg, &chain);
  if (!o.feasible) throw std::logic_error("span_chain on infeasible span");
  return chain;
}

DpTable dp_all_pairs(const SlotList& slots, const Config& cfg) {
  int n = slots.size();
  DpTable table;
  table.n = n;
  table.gain.assign(static_cast<size_t>(n) * (n + 1), kNegInf);
  table.split.assign(static_cast<size_t>(n) * (n + 1), kSplitNone);

  auto gain_ref = [&](int i, int k) -> double& {
    return table.gain[static_cast<size_t>(i) * (n + 1) + k];
  };
  auto split_ref = [&](int i, int k) -> int& {
    return table.split[static_cast<size_t>(i) * (n + 1) + k];
  };

  // next_forced[j] over the doubled index line, for the "no forced slot
  // strictly inside a single-chain span" test.
  std::vector<int> next_forced(2 * n + 1);
  next_forced[2 * n] = std::numeric_limits<int>::max() / 2;
  for (int j = 2 * n - 1; j >= 0; --j)
    next_forced[j] = slots.slot(j % n).forced ? j : next_forced[j + 1];

  for (int i = 0; i < n; ++i) {
    gain_ref(i, 1) = 0.0;
    split_ref(i, 1) = kSplitType0;
  }

  const bool par = cfg.parallel;
  for (int k = 2; k <= n; ++k) {
    // Cells of one layer only read layers < k: safe to fill in parallel,
    // and each cell's candidate scan is a fixed serial order, so results
    // are bit-identical with any thread count.
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int i = 0; i < n; ++i) {
      double best = kNegInf;
      int bs = kSplitNone;
      if (next_forced[i + 1] >= i + k) {
        SpanOutcome e = span_impl(slots, i, k, cfg, nullptr);
        if (e.feasible) {
          best = e.gain;
          bs = kSplitType0;
        }
      }
      for (int alpha = 1; alpha < k; ++alpha) {
        double cand = gain_ref(i, alpha) + gain_ref((i + alpha) % n, k - alpha);
        if (cand > best + cfg.tie_tol) {
          best = cand;
          bs = alpha;
        }
      }
      gain_ref(i, k) = best;
      split_ref(i, k) = bs;
    }
  }
  return table;
}

namespace {

void collect_spans(const DpTable& table, int i, int k,
                   std::vector<std::pair<int, int>>& out) {
  int s = table.split_at(i % table.n, k);
  if (s == kSplitType0) {
    out.emplace_back(i % table.n, k);
    return;
  }
  if (s == kSplitNone) throw std::logic_error("reconstructing an infeasible window");
  collect_spans(table, i, s, out);
  collect_spans(table, i + s, k - s, out);
}

// Remove duplicate and collinear vertices from a cycle until stable.
std::vector<Point> cleanup_cycle(std::vector<Point> v, double eps) {
  double dia = 0.0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) dia = std::max(dia, geom::dist(v[i], v[j]));
  double dist_tol = eps * dia;
  double turn_tol = eps * dia * dia;

  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < v.size();) {
      size_t j = (i + 1) % v.size();
      if (geom::dist(v[i], v[j]) <= dist_tol) {
        v.erase(v.begin() + j);
        changed = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i < v.size() && v.size() >= 3;) {
      size_t h = (i + v.size() - 1) % v.size();
      size_t j = (i + 1) % v.size();
      if (geom::cross(v[i] - v[h], v[j] - v[i]) <= turn_tol) {
        v.erase(v.begin() + i);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return v;
}

std::string pattern_of(const std::vector<bool>& used) {
  std::string s(used.size(), 'N');
  for (size_t i = 0; i < used.size(); ++i)
    if (used[i]) s[i] = 'U';
  return s;
}

}  // namespace

LooseFit all_unused_fit(const SlotList& slots, const Config& cfg) {
  LooseFit out;
  if (slots.any_forced()) return out;
  geom::ConvexPolygon poly;
  try {
    poly = slots.boundary_polygon(cfg.eps_geom);
  } catch (const std::exception&) {
    return out;  // phantom slots or degenerate joints: no such configuration
  }
  int n = poly.size();
  double tol = cfg.eps_geom * poly.diameter();

  chains::MidpointChain ch = chains::closed_chain(poly, std::nullopt, cfg.eps_geom);
  if (ch.status == chains::ChainStatus::kUnique) {
    if (ch.signed_area > 0.0 && chains::chain_feasible(ch.vertices, poly, n - 1, tol)) {
      out.feasible = true;
      out.area = ch.signed_area;
      out.chain.assign(ch.vertices.begin(), ch.vertices.begin() + n);
    }
    return out;
  }
  if (ch.status == chains::ChainStatus::kNoSolution) return out;

  // Family: feasible iff the region of valid starts has real area.
  std::vector<Point> region = chains::all_n_feasible_region(poly, cfg.eps_geom);
  if (region.size() < 3) return out;
  double ra = geom::signed_area(region);
  if (ra <= cfg.eps_geom * poly.diameter() * poly.diameter()) return out;
  Point rep{0.0, 0.0};
  for (const Point& p : region) rep = rep + p;
  rep = (1.0 / static_cast<double>(region.size())) * rep;
  chains::MidpointChain best = chains::closed_chain(poly, rep, cfg.eps_geom);
  out.feasible = best.signed_area > 0.0;
  out.family = true;
  out.area = best.signed_area;
  out.chain.assign(best.vertices.begin(), best.vertices.begin() + n);
  return out;
}

Solution solve_anchored(const SlotList& slots, const Config& cfg, int anchor,
                        bool enumerate_ties) {
  Solution sol;
  int n = slots.size();

  // Work at unit diameter around the joint centroid so tolerances are
  // dimensionless; map back at the end.
  Point center{0.0, 0.0};
  for (int i = 0; i < n; ++i) center = center + slots.joint(i);
  center = (1.0 / n) * center;
  double s = slots.scale();
  SlotList ns = normalized_slots(slots, center, s);

  DpTable table = dp_all_pairs(ns, cfg);

  std::vector<int> anchors;
  bool consider_all_unused = false;
  if (anchor >= 0) {
    anchors.push_back(anchor % n);
  } else if (ns.any_forced()) {
    anchors.push_back(ns.first_forced());
  } else {
    anchors.resize(n);
    for (int i = 0; i < n; ++i) anchors[i] = i;
    consider_all_unused = true;
  }

  int best_i = anchors.front();
  double best_gain = kNegInf;
  for (int i : anchors) {
    double g = table.gain_at(i, n);
    if (g > best_gain) {
      best_gain = g;
      best_i = i;
    }
  }
  double base = ns.base_area();
  double anchored_area = base + best_gain;

  LooseFit loose = consider_all_unused ? all_unused_fit(ns, cfg) : LooseFit{};
  bool use_loose = loose.feasible && loose.area > anchored_area + cfg.tie_tol;
  double expected = use_loose ? loose.area : anchored_area;

  std::vector<Point> verts;
  std::vector<bool> used(n, false);
  bool family = false;
  if (use_loose) {
    verts = loose.chain;
    family = loose.family;
  } else {
    if (!std::isfinite(best_gain)) {
      sol.message = "no feasible configuration";
      return sol;
    }
    std::vector<std::pair<int, int>> spans;
    collect_spans(table, best_i, n, spans);
    for (auto [st, w] : spans) {
      used[st] = true;
      std::vector<Point> part;
      SpanOutcome o = span_impl(ns, st, w, cfg, &part);
      if (!o.feasible) throw std::logic_error("reconstructed span infeasible");
      family = family || o.family;
      verts.insert(verts.end(), part.begin(), part.end());
    }
  }

  verts = cleanup_cycle(std::move(verts), cfg.eps_geom);
  geom::ConvexPolygon qn;
  try {
    qn = geom::ConvexPolygon::from_vertices(verts, cfg.eps_geom);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("internal: assembled polygon invalid: ") + e.what());
  }

  // Cross-check the assembled polygon against the table prediction and make
  // sure it really encloses the input boundary.
  if (std::abs(qn.area() - expected) > 1e-6 * std::max(1.0, std::abs(expected)))
    throw std::runtime_error("internal: assembled area disagrees with table");
  for (int i = 0; i < n; ++i) {
    if (!geom::point_on_boundary(qn, ns.joint(i), 1e-6))
      throw std::runtime_error("internal: input vertex escapes the solution");
  }

  std::vector<Point> global;
  global.reserve(verts.size());
  for (const Point& p : qn.vertices()) global.push_back(center + s * p);
  sol.polygon = geom::ConvexPolygon::from_vertices(std::move(global), cfg.eps_geom);
  sol.area = sol.polygon.area();
  sol.used = used;
  sol.un_sequence = pattern_of(used);
  sol.classification.resize(n);
  for (int i = 0; i < n; ++i)
    sol.classification[i] = (used[i] || used[(i + 1) % n]) ? VertexRole::kOnUsedSide
                                                           : VertexRole::kMidpoint;
  sol.family = family;
  sol.ok = true;

  if (enumerate_ties) {
    double window = cfg.tie_tol * std::max(1.0, std::abs(expected));
    std::set<std::string> pats;
    pats.insert(sol.un_sequence);
    for (int i : anchors) {
      if (base + table.gain_at(i, n) >= expected - window) {
        std::vector<std::pair<int, int>> spans;
        collect_spans(table, i, n, spans);
        std::vector<bool> u(n, false);
        for (auto [st, w] : spans) u[st] = true;
        pats.insert(pattern_of(u));
      }
    }
    if (consider_all_unused && loose.feasible && loose.area >= expected - window)
      pats.insert(std::string(static_cast<size_t>(n), 'N'));
    sol.ties.assign(pats.begin(), pats.end());
  }
  return sol;
}

Solution solve_max_area(const geom::ConvexPolygon& poly, const Config& cfg,
                        bool enumerate_ties) {
  geom::ValidationReport report = validate_input(poly, cfg.eps_angle);
  if (report.verdict != geom::Validity::kOk) {
    Solution sol;
    sol.verdict = report.verdict;
    sol.message = report.message;
    return sol;
  }
  SlotList slots = SlotList::from_polygon(poly, cfg.eps_geom);
  Solution sol = solve_anchored(slots, cfg, -1, enumerate_ties);
  if (!sol.ok) return sol;

  // Engine classification is per joint; joint(i) is input vertex i+1.
  int n = poly.size();
  std::vector<VertexRole> by_vertex(n);
  for (int j = 0; j < n; ++j) by_vertex[j] = sol.classification[(j - 1 + n) % n];
  sol.classification = std::move(by_vertex);
  return sol;
}

std::string canonical_pattern(const std::string& s) {
  std::string best = s;
  std::string cur = s;
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t r = 0; r < cur.size(); ++r) {
      std::string rot = cur.substr(r) + cur.substr(0, r);
      if (rot < best) best = rot;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return best;
}

bool same_pattern_orbit(const std::string& a, const std::string& b) {
  return a.size() == b.size() && canonical_pattern(a) == canonical_pattern(b);
}

}  // namespace circumgon::solver
