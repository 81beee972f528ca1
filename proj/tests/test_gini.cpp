#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "circumgon/gini.hpp"

using namespace circumgon;
using geom::Point;
using gini::LorenzFault;

namespace {

bool chain_matches(const std::vector<Point>& got, const std::vector<Point>& want,
                   double tol = 1e-9) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (geom::dist(got[i], want[i]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("lorenz validation faults") {
  using gini::lorenz_from_points;

  CHECK_THROWS_AS(lorenz_from_points({{0, 0}}), gini::LorenzError);

  try {
    lorenz_from_points({{0, 0}, {0.5, 1.5}, {1, 1}});
    FAIL("expected a range error");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kBadRange);
    CHECK(e.indices == std::vector<int>{1});
  }

  double nan = std::nan("");
  CHECK_THROWS_AS(lorenz_from_points({{0, 0}, {0.5, nan}, {1, 1}}), gini::LorenzError);

  try {
    lorenz_from_points({{0.2, 0.1}, {1, 1}});
    FAIL("expected a range error");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kBadRange);
  }

  try {
    lorenz_from_points({{0, 0}, {0.5, 0.2}, {0.5, 0.3}, {1, 1}});
    FAIL("expected duplicate p");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kDuplicateP);
    CHECK(e.indices == std::vector<int>{2});
  }

  try {
    lorenz_from_points({{0, 0}, {0.6, 0.2}, {0.4, 0.3}, {1, 1}});
    FAIL("expected monotonicity failure");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kNotMonotone);
  }

  try {
    lorenz_from_points({{0, 0}, {0.2, 0.3}, {0.5, 0.4}, {0.9, 0.41}, {1, 1}});
    FAIL("expected convexity failure");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kNotConvex);
    CHECK(e.indices == std::vector<int>{1, 2});
  }

  // A flat final segment bends the curve downward, so it is caught here too.
  try {
    lorenz_from_points({{0, 0}, {0.4, 0.2}, {0.7, 1.0}, {1, 1}});
    FAIL("expected convexity failure");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kNotConvex);
  }

  // Slope 1.2 then 0.8: above the diagonal and bending the wrong way.
  try {
    gini::parse_lorenz("0,0\n0.5,0.6\n1,1\n");
    FAIL("expected convexity failure");
  } catch (const gini::LorenzError& e) {
    CHECK(e.fault == LorenzFault::kNotConvex);
    CHECK(e.indices == std::vector<int>{1});
  }
}

TEST_CASE("collinear interior points are flagged") {
  auto data = gini::lorenz_from_points({{0, 0}, {0.25, 0.1}, {0.5, 0.2}, {1, 1}});
  REQUIRE(data.collinear.size() == 4);
  CHECK_FALSE(data.collinear[0]);
  CHECK(data.collinear[1]);
  CHECK_FALSE(data.collinear[2]);
  CHECK_FALSE(data.collinear[3]);
}

TEST_CASE("csv parsing") {
  auto data = gini::parse_lorenz("p,L\n0.2, 0.05\n0.6,0.3\n", /*add_endpoints=*/true);
  REQUIRE(data.points.size() == 4);
  CHECK(geom::dist(data.points[1], {0.2, 0.05}) <= 1e-15);
  CHECK(geom::dist(data.points[2], {0.6, 0.3}) <= 1e-15);

  // Scientific notation is not a header.
  auto sci = gini::parse_lorenz("5e-1,2.5e-1\n", true);
  REQUIRE(sci.points.size() == 3);
  CHECK(sci.points[1].x == doctest::Approx(0.5));

  // Windows line endings and blank lines are tolerated.
  auto crlf = gini::parse_lorenz("p,L\r\n\r\n0.5,0.25\r\n", true);
  CHECK(crlf.points.size() == 3);

  CHECK_THROWS_AS(gini::parse_lorenz("", false), gini::LorenzError);
  CHECK_THROWS_AS(gini::parse_lorenz("0.5 0.25\n", true), gini::LorenzError);
  CHECK_THROWS_AS(gini::parse_lorenz("0.5,abc\n", true), gini::LorenzError);
  CHECK_THROWS_AS(gini::parse_lorenz("0.5,0.25x\n", true), gini::LorenzError);
  // Without add_endpoints the endpoints must be present.
  CHECK_THROWS_AS(gini::parse_lorenz("0.5,0.25\n", false), gini::LorenzError);
}

TEST_CASE("trapezoid lower bound") {
  auto three = gini::lorenz_from_points({{0, 0}, {0.5, 0.25}, {1, 1}});
  CHECK(gini::gini_lower(three) == doctest::Approx(0.25).epsilon(1e-12));
  auto diag = gini::lorenz_from_points({{0, 0}, {1, 1}});
  CHECK(gini::gini_lower(diag) == doctest::Approx(0.0));
}

TEST_CASE("slot layout around the unit square") {
  // Normal start: left, bottom phantom, m segments, right phantom, top.
  auto three = gini::lorenz_from_points({{0, 0}, {0.5, 0.25}, {1, 1}});
  auto slots = gini::build_lorenz_slots(three);
  REQUIRE(slots.size() == 6);
  CHECK(slots.slot(0).forced);                                  // left
  CHECK(slots.slot(1).kind == solver::SlotKind::kPhantom);      // bottom
  CHECK_FALSE(slots.slot(1).forced);
  CHECK_FALSE(slots.slot(2).forced);                            // segment 0
  CHECK_FALSE(slots.slot(3).forced);                            // segment 1
  CHECK(slots.slot(4).kind == solver::SlotKind::kPhantom);      // right
  CHECK(slots.slot(5).forced);                                  // top
  CHECK(slots.first_forced() == 0);

  // Flat start: segment 0 is the bottom edge itself, forced; no bottom phantom.
  auto flat = gini::lorenz_from_points({{0, 0}, {0.3, 0}, {0.6, 0.2}, {1, 1}});
  auto fslots = gini::build_lorenz_slots(flat);
  REQUIRE(fslots.size() == 6);
  CHECK(fslots.slot(1).kind == solver::SlotKind::kReal);
  CHECK(fslots.slot(1).forced);

  // Pinned straight run: both incident segments forced.
  auto col = gini::lorenz_from_points({{0, 0}, {0.25, 0.1}, {0.5, 0.2}, {1, 1}});
  auto cslots = gini::build_lorenz_slots(col);
  REQUIRE(cslots.size() == 7);
  CHECK(cslots.slot(2).forced);
  CHECK(cslots.slot(3).forced);
  CHECK_FALSE(cslots.slot(4).forced);
}

TEST_CASE("bounds: single bend") {
  auto data = gini::lorenz_from_points({{0, 0}, {0.5, 0.25}, {1, 1}});
  gini::GiniBounds gb = gini::gini_bounds(data);
  CHECK(std::abs(gb.lower - 0.25) <= 1e-12);
  CHECK(std::abs(gb.upper - 0.5) <= 1e-9);
  CHECK(gb.pattern == "UN");
  CHECK_FALSE(gb.phantom_bottom_used);
  CHECK(gb.phantom_right_used);
  CHECK(chain_matches(gb.upper_chain, {{0, 0}, {1, 0.5}, {1, 1}}));
  CHECK(chain_matches(gb.lower_chain, {{0, 0}, {0.5, 0.25}, {1, 1}}));
}

TEST_CASE("bounds: bare diagonal") {
  auto data = gini::lorenz_from_points({{0, 0}, {1, 1}});
  gini::GiniBounds gb = gini::gini_bounds(data);
  CHECK(std::abs(gb.lower - 0.0) <= 1e-12);
  CHECK(std::abs(gb.upper - 1.0) <= 1e-9);
  CHECK(gb.pattern == "N");
  CHECK(gb.phantom_bottom_used);
  CHECK(gb.phantom_right_used);
  CHECK(chain_matches(gb.upper_chain, {{0, 0}, {1, 0}, {1, 1}}));
}

TEST_CASE("bounds: pinned straight run") {
  auto data = gini::lorenz_from_points({{0, 0}, {0.25, 0.1}, {0.5, 0.2}, {1, 1}});
  gini::GiniBounds gb = gini::gini_bounds(data);
  CHECK(std::abs(gb.lower - 0.3) <= 1e-12);
  CHECK(std::abs(gb.upper - 0.6) <= 1e-9);
  CHECK(gb.pattern == "UUN");
  CHECK_FALSE(gb.phantom_bottom_used);
  CHECK(gb.phantom_right_used);
  CHECK(chain_matches(gb.upper_chain, {{0, 0}, {1, 0.4}, {1, 1}}));
}

TEST_CASE("bounds: flat start") {
  auto data = gini::lorenz_from_points({{0, 0}, {0.3, 0}, {0.6, 0.2}, {1, 1}});
  gini::GiniBounds gb = gini::gini_bounds(data);
  CHECK(std::abs(gb.lower - 0.46) <= 1e-12);
  CHECK(std::abs(gb.upper - 0.673333333333) <= 1e-9);
  CHECK(gb.pattern == "UUN");
  CHECK_FALSE(gb.phantom_bottom_used);  // dropped entirely
  CHECK(gb.phantom_right_used);
  CHECK(chain_matches(gb.upper_chain, {{0, 0}, {0.3, 0}, {1, 7.0 / 15.0}, {1, 1}}));
}

TEST_CASE("circle-arc example, n = 12") {
  auto data = gini::farris_example(12);
  REQUIRE(data.points.size() == 4);
  CHECK(geom::dist(data.points[1], {0.5, 1.0 - std::sqrt(3.0) / 2.0}) <= 1e-12);

  gini::GiniBounds gb = gini::gini_bounds(data);
  double s3 = std::sqrt(3.0);
  CHECK(std::abs(gb.lower - 0.5) <= 1e-12);
  CHECK(std::abs(gb.upper - (11.0 - 6.0 * s3)) <= 1e-9);
  CHECK(gb.pattern == "NNN");
  CHECK(gb.phantom_bottom_used);
  CHECK(gb.phantom_right_used);
  std::vector<Point> want{
      {0, 0}, {2 - s3, 0}, {s3 - 1, 2 - s3}, {1, s3 - 1}, {1, 1}};
  CHECK(chain_matches(gb.upper_chain, want));

  // Every data point sits at an edge midpoint of the attaining curve.
  for (int j = 1; j <= 2; ++j) {
    Point mid = 0.5 * (want[j] + want[j + 1]);
    CHECK(geom::dist(mid, data.points[j]) <= 1e-9);
  }
}

TEST_CASE("circle-arc example, n = 20") {
  auto data = gini::farris_example(20);
  REQUIRE(data.points.size() == 6);
  gini::GiniBounds gb = gini::gini_bounds(data);
  CHECK(std::abs(gb.lower - 0.545084971875) <= 1e-9);
  CHECK(std::abs(gb.upper - 0.583844403245) <= 1e-9);
  CHECK(gb.pattern == "NNNNN");
}

TEST_CASE("circle-arc example rejects other n") {
  CHECK_THROWS_AS(gini::farris_example(13), std::invalid_argument);
  CHECK_THROWS_AS(gini::farris_example(16), std::invalid_argument);
  CHECK_THROWS_AS(gini::farris_example(4), std::invalid_argument);
}

TEST_CASE("refining the data tightens both bounds") {
  auto coarse = gini::farris_example(12);
  gini::GiniBounds gc = gini::gini_bounds(coarse);

  // Insert another point of the same circle between points 1 and 2.
  double a = -std::numbers::pi / 4;
  std::vector<Point> pts = coarse.points;
  pts.insert(pts.begin() + 2, {std::cos(a), 1.0 + std::sin(a)});
  gini::GiniBounds gr = gini::gini_bounds(gini::lorenz_from_points(pts));
  CHECK(gr.lower >= gc.lower - 1e-12);
  CHECK(gr.upper <= gc.upper + 1e-12);
  CHECK(gr.lower <= gr.upper + 1e-12);

  // Insert the midpoint of a chord instead: the lower bound is unchanged and
  // the upper bound can only shrink (that chord becomes pinned).
  std::vector<Point> mid = coarse.points;
  mid.insert(mid.begin() + 2, 0.5 * (coarse.points[1] + coarse.points[2]));
  gini::GiniBounds gm = gini::gini_bounds(gini::lorenz_from_points(mid));
  CHECK(std::abs(gm.lower - gc.lower) <= 1e-12);
  CHECK(gm.upper <= gc.upper + 1e-12);
}

TEST_CASE("bounds are ordered on sampled power curves") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> gamma_d(1.5, 4.0);
  for (int trial = 0; trial < 12; ++trial) {
    double gamma = gamma_d(rng);
    int m = 3 + static_cast<int>(rng() % 4);
    std::vector<Point> pts{{0, 0}};
    double p = 0.0;
    for (int j = 1; j < m; ++j) {
      p += (1.0 - p) * (0.2 + 0.6 * (static_cast<double>(rng() % 1000) / 1000.0)) /
           (m - j + 1);
      pts.push_back({p, std::pow(p, gamma)});
    }
    pts.push_back({1, 1});
    CAPTURE(trial);
    CAPTURE(gamma);
    gini::GiniBounds gb = gini::gini_bounds(gini::lorenz_from_points(pts));
    CHECK(gb.lower <= gb.upper + 1e-9);
    CHECK(gb.lower >= -1e-9);
    CHECK(gb.upper <= 1.0 + 1e-9);
    // The attaining curve starts and ends at the right corners.
    REQUIRE(gb.upper_chain.size() >= 2);
    CHECK(geom::dist(gb.upper_chain.front(), {0, 0}) <= 1e-12);
    CHECK(geom::dist(gb.upper_chain.back(), {1, 1}) <= 1e-12);
  }
}
