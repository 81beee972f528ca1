#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "circumgon/solver.hpp"

namespace circumgon::oracle {

// One enumerated used/unused assignment. Bit b of `mask` says whether slot
// optional_slots[b] carries a side; forced slots always do.
struct PatternResult {
  std::uint32_t mask = 0;
  bool feasible = false;
  bool family = false;
  double area = 0.0;  // absolute enclosed area when feasible
};

struct BruteForce {
  bool found = false;
  double best_area = 0.0;
  std::uint32_t best_mask = 0;
  std::vector<int> optional_slots;
  std::vector<PatternResult> table;  // size 2^optional_slots.size()

  // Per-slot used flags for a mask (forced slots included).
  std::vector<bool> used_of(std::uint32_t mask, int slot_count) const;
  std::string pattern_of(std::uint32_t mask, int slot_count) const;
};

class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive reference maximizer: tries every subset of the optional slots,
// sums single-chain span gains between consecutive used slots, and keeps the
// best feasible assignment (ties broken toward the smallest mask). Throws
// LimitExceeded when more than 2^cfg.enum_limit patterns would be needed.
// cfg.parallel distributes masks over OpenMP threads; the reduction is a
// serial scan, so the result does not depend on the thread count.
BruteForce brute_force_max(const solver::SlotList& slots, const Config& cfg);

// Regular n-gon with vertices at angles pi/2 + 2*pi*k/n, counterclockwise.
geom::ConvexPolygon regular_ngon(int n, double circumradius = 1.0);

struct ClosedForm {
  double area = 0.0;
  std::string pattern;
};

// Exact optimum for the regular n-gon with circumradius 1 (n >= 5), with a
// representative optimal used/unused pattern.
ClosedForm regular_closed_form(int n);

// Random polygon that passes validate_input: jittered angles and radii
// around a regular n-gon, retried until valid.
geom::ConvexPolygon random_valid_polygon(int n, std::mt19937_64& rng);

}  // namespace circumgon::oracle
