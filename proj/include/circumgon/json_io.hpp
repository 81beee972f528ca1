#pragma once

#include <string>
#include <vector>

#include "circumgon/gini.hpp"
#include "circumgon/oracle.hpp"
#include "circumgon/solver.hpp"

namespace circumgon::io {

// Round to 12 significant digits; all emitted numbers go through this so
// output is deterministic and free of representation noise.
double round_sig(double v);

// {"vertices": [[x, y], ...]}; throws std::invalid_argument on anything else.
std::vector<geom::Point> parse_polygon_json(const std::string& text);

std::string solution_json(const solver::Solution& sol);
std::string gini_json(const gini::GiniBounds& gb);
std::string oracle_json(const oracle::BruteForce& bf, int slot_count);
std::string regular_json(int n, const oracle::ClosedForm& cf,
                         const solver::Solution* compare);

}  // namespace circumgon::io
