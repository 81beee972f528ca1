#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <stdexcept>

#include "circumgon/json_io.hpp"
#include "circumgon/svg.hpp"

using namespace circumgon;

TEST_CASE("round_sig") {
  CHECK(io::round_sig(0.0) == 0.0);
  CHECK(io::round_sig(1.0) == 1.0);
  CHECK(io::round_sig(1.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(io::round_sig(1.0 / 3.0) != 1.0 / 3.0);  // truncated to 12 digits
  double inf = std::numeric_limits<double>::infinity();
  CHECK(io::round_sig(inf) == inf);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 100; ++i) {
    double v = d(rng);
    double r = io::round_sig(v);
    CHECK(io::round_sig(r) == r);  // idempotent
    CHECK(std::abs(r - v) <= 1e-11 * std::abs(v));
  }
}

TEST_CASE("polygon json parsing") {
  auto pts = io::parse_polygon_json(R"({"vertices": [[0, 0], [2, 0.5], [1, 3]]})");
  REQUIRE(pts.size() == 3);
  CHECK(pts[1].x == 2.0);
  CHECK(pts[1].y == 0.5);

  CHECK_THROWS_AS(io::parse_polygon_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_polygon_json("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_polygon_json(R"({"points": []})"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_polygon_json(R"({"vertices": [[1, 2, 3]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::parse_polygon_json(R"({"vertices": [["a", 2]]})"),
                  std::invalid_argument);
}

TEST_CASE("solution json is deterministic and well formed") {
  auto poly = oracle::regular_ngon(5);
  solver::Solution sol = solver::solve_max_area(poly);
  REQUIRE(sol.ok);
  std::string a = io::solution_json(sol);
  std::string b = io::solution_json(solver::solve_max_area(poly));
  CHECK(a == b);
  CHECK(a.back() == '\n');

  auto doc = nlohmann::json::parse(a);
  CHECK(doc["area"].is_number());
  CHECK(std::abs(doc["area"].get<double>() - 4.504268311618) <= 1e-9);
  CHECK(doc["un_sequence"].get<std::string>().size() == 5);
  REQUIRE(doc["classification"].size() == 5);
  for (const auto& c : doc["classification"])
    CHECK((c == "MIDPOINT" || c == "USED"));
  CHECK(doc["polygon"].size() == 3);
  CHECK_FALSE(doc["family"].get<bool>());
}

TEST_CASE("gini json carries the bounds and chains") {
  auto data = gini::lorenz_from_points({{0, 0}, {0.5, 0.25}, {1, 1}});
  std::string s = io::gini_json(gini::gini_bounds(data));
  auto doc = nlohmann::json::parse(s);
  CHECK(std::abs(doc["lower"].get<double>() - 0.25) <= 1e-12);
  CHECK(std::abs(doc["upper"].get<double>() - 0.5) <= 1e-9);
  CHECK(doc["pattern"] == "UN");
  CHECK(doc["lower_chain"].size() == 3);
  CHECK(doc["upper_chain"].size() == 3);
  CHECK(doc["phantom_bottom_used"] == false);
  CHECK(doc["phantom_right_used"] == true);
}

TEST_CASE("oracle json lists the table for small inputs") {
  Config cfg;
  auto sl = solver::SlotList::from_polygon(oracle::regular_ngon(5));
  oracle::BruteForce bf = oracle::brute_force_max(sl, cfg);
  auto doc = nlohmann::json::parse(io::oracle_json(bf, 5));
  CHECK(doc["pattern_count"] == 32);
  CHECK(doc["best_pattern"].get<std::string>().size() == 5);
  REQUIRE(doc.contains("table"));
  CHECK(doc["table"].size() == 32);
  CHECK(doc["table"][0]["mask"] == 0);
  CHECK(std::abs(doc["best_area"].get<double>() - 4.504268311618) <= 1e-9);
}

TEST_CASE("regular json with and without the solver comparison") {
  auto cf = oracle::regular_closed_form(8);
  auto doc = nlohmann::json::parse(io::regular_json(8, cf, nullptr));
  CHECK(doc["n"] == 8);
  CHECK(doc["pattern"] == "UNUNUNUN");
  CHECK_FALSE(doc.contains("rel_diff"));

  solver::Solution sol = solver::solve_max_area(oracle::regular_ngon(8));
  auto cmp = nlohmann::json::parse(io::regular_json(8, cf, &sol));
  CHECK(cmp["rel_diff"].get<double>() <= 1e-9);
  CHECK(cmp["solver_un_sequence"].get<std::string>().size() == 8);
}

TEST_CASE("polygon scene svg has the expected layers") {
  auto poly = oracle::regular_ngon(6);
  solver::Solution sol = solver::solve_max_area(poly);
  std::string svg = io::polygon_scene_svg(poly, sol);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  CHECK(svg.find("viewBox=") != std::string::npos);
  CHECK(svg.find("<g id=\"input\"") != std::string::npos);
  CHECK(svg.find("<g id=\"solution\"") != std::string::npos);
  CHECK(svg.find("<g id=\"external-regions\"") != std::string::npos);
}

TEST_CASE("gini scene svg has the expected layers") {
  auto data = gini::farris_example(12);
  gini::GiniBounds gb = gini::gini_bounds(data);
  std::string svg = io::gini_scene_svg(data, gb);
  CHECK(svg.find("<g id=\"frame\"") != std::string::npos);
  CHECK(svg.find("<g id=\"diagonal\"") != std::string::npos);
  CHECK(svg.find("<g id=\"lorenz\"") != std::string::npos);
  CHECK(svg.find("<g id=\"upper\"") != std::string::npos);
}
