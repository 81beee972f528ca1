#include "circumgon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circumgon::oracle {

using geom::Point;
using solver::SlotList;

std::vector<bool> BruteForce::used_of(std::uint32_t mask, int slot_count) const {
  std::vector<bool> used(slot_count, true);
  for (int i : optional_slots) used[i] = false;
  for (size_t b = 0; b < optional_slots.size(); ++b)
    if (mask & (1u << b)) used[optional_slots[b]] = true;
  return used;
}

std::string BruteForce::pattern_of(std::uint32_t mask, int slot_count) const {
  std::vector<bool> used = used_of(mask, slot_count);
  std::string s(slot_count, 'N');
  for (int i = 0; i < slot_count; ++i)
    if (used[i]) s[i] = 'U';
  return s;
}

BruteForce brute_force_max(const SlotList& slots, const Config& cfg) {
  int n = slots.size();
  BruteForce bf;
  for (int i = 0; i < n; ++i)
    if (!slots.slot(i).forced) bf.optional_slots.push_back(i);

  int free_count = static_cast<int>(bf.optional_slots.size());
  if (free_count > cfg.enum_limit)
    throw LimitExceeded("enumeration of 2^" + std::to_string(free_count) +
                        " patterns exceeds the limit of 2^" + std::to_string(cfg.enum_limit));

  // Normalize once; gains and base area are scaled back at the end.
  Point center{0.0, 0.0};
  for (int i = 0; i < n; ++i) center = center + slots.joint(i);
  center = (1.0 / n) * center;
  double s = slots.scale();
  SlotList ns = solver::normalized_slots(slots, center, s);
  double base = ns.base_area();

  std::uint32_t count = 1u << free_count;
  bf.table.assign(count, PatternResult{});

  const bool par = cfg.parallel;
  // Masks are independent; the best-of reduction below is a serial scan in
  // mask order, so the outcome is identical with any thread count.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (par)
#endif
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(count); ++m) {
    std::uint32_t mask = static_cast<std::uint32_t>(m);
    PatternResult r;
    r.mask = mask;

    std::vector<int> used_idx;
    used_idx.reserve(n);
    {
      std::vector<bool> used = bf.used_of(mask, n);
      for (int i = 0; i < n; ++i)
        if (used[i]) used_idx.push_back(i);
    }

    if (used_idx.empty()) {
      solver::LooseFit fit = solver::all_unused_fit(ns, cfg);
      r.feasible = fit.feasible;
      r.family = fit.family;
      if (fit.feasible) r.area = fit.area * s * s;
    } else {
      double gain_sum = 0.0;
      bool ok = true;
      bool family = false;
      int used_count = static_cast<int>(used_idx.size());
      for (int t = 0; t < used_count && ok; ++t) {
        int cur = used_idx[t];
        int nxt = used_idx[(t + 1) % used_count];
        int width = (nxt - cur + n) % n;
        if (width == 0) width = n;  // a single used slot spans the whole cycle
        solver::SpanEval e = solver::eval_span(ns, cur, width, cfg);
        ok = e.feasible;
        family = family || e.family;
        gain_sum += e.gain;
      }
      r.feasible = ok;
      r.family = family;
      if (ok) r.area = (base + gain_sum) * s * s;
    }
    bf.table[mask] = r;
  }

  for (const PatternResult& r : bf.table) {
    if (!r.feasible) continue;
    if (!bf.found || r.area > bf.best_area) {
      bf.found = true;
      bf.best_area = r.area;
      bf.best_mask = r.mask;
    }
  }
  return bf;
}

geom::ConvexPolygon regular_ngon(int n, double circumradius) {
  std::vector<Point> vs(n);
  for (int k = 0; k < n; ++k) {
    double a = std::numbers::pi / 2 + 2.0 * std::numbers::pi * k / n;
    vs[k] = {circumradius * std::cos(a), circumradius * std::sin(a)};
  }
  return geom::ConvexPolygon::from_vertices(std::move(vs));
}

ClosedForm regular_closed_form(int n) {
  if (n < 5) throw std::invalid_argument("closed form needs n >= 5");
  double pi = std::numbers::pi;
  double t = std::tan(pi / n);
  double sn = std::sin(pi / n);
  double cs = std::cos(pi / n);
  double common = sn * sn * sn * sn / (cs * cs);
  double ngon = n * t;  // area of the regular n-gon itself, circumradius 1

  auto rep = [](const std::string& unit, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += unit;
    return out;
  };

  ClosedForm cf;
  if (n % 2 == 0) {
    cf.area = ngon + (n / 2) * common * std::tan(2.0 * pi / n);
    cf.pattern = rep("UN", n / 2);
  } else if (n % 4 == 1) {
    cf.area = ngon + common * ((n + 3) / 4 * std::tan(2.0 * pi / n) -
                               std::tan(3.0 * pi / (2.0 * n)));
    cf.pattern = "U" + std::string((n - 5) / 2, 'N') + rep("UN", (n + 3) / 4);
  } else {
    cf.area = ngon + common * ((n + 1) / 4 * std::tan(2.0 * pi / n) -
                               std::tan(pi / (2.0 * n)));
    cf.pattern = "U" + std::string((n - 3) / 2, 'N') + rep("UN", (n + 1) / 4);
  }
  return cf;
}

geom::ConvexPolygon random_valid_polygon(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::uniform_real_distribution<double> radius(0.88, 1.12);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Point> vs(n);
    for (int k = 0; k < n; ++k) {
      double a = 2.0 * std::numbers::pi * (k + jitter(rng)) / n;
      double r = radius(rng);
      vs[k] = {r * std::cos(a), r * std::sin(a)};
    }
    try {
      geom::ConvexPolygon poly = geom::ConvexPolygon::from_vertices(std::move(vs));
      if (geom::validate_input(poly).verdict == geom::Validity::kOk) return poly;
    } catch (const std::invalid_argument&) {
      // jitter produced a non-convex ring; try again
    }
  }
  return regular_ngon(n);
}

}  // namespace circumgon::oracle
