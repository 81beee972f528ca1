// circumgon: maximum-area polygons circumscribed about a convex polygon, and
// sharp Gini-index bounds from cumulative-share data.
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "circumgon/gini.hpp"
#include "circumgon/json_io.hpp"
#include "circumgon/oracle.hpp"
#include "circumgon/solver.hpp"
#include "circumgon/svg.hpp"

namespace {

// Exit codes: 0 ok, 2 invalid input, 3 unbounded instance, 4 enumeration too
// large, 1 anything unexpected.
constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitTooLarge = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

int verdict_exit(const circumgon::solver::Solution& sol) {
  std::cerr << sol.message << "\n";
  switch (sol.verdict) {
    case circumgon::geom::Validity::kTooFewVertices:
      return kExitInvalid;
    case circumgon::geom::Validity::kUnbounded:
      return kExitUnbounded;
    default:
      return kExitUnexpected;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace circumgon;

  CLI::App app{"maximum-area circumscribed polygons and Gini bounds"};
  app.require_subcommand(1);

  Config cfg;
  // CLI11 silently drops environment values that fail validation, so the
  // override is checked by hand: a bad CIRCUMGON_EPS must be an error, not a
  // quiet fallback to the default. --eps still wins over the environment.
  if (const char* env_eps = std::getenv("CIRCUMGON_EPS")) {
    std::string text = env_eps;
    if (!text.empty()) {
      char* end = nullptr;
      double v = std::strtod(text.c_str(), &end);
      if (end != text.c_str() + text.size() || !std::isfinite(v) || v <= 0.0) {
        std::cerr << "CIRCUMGON_EPS: expected a positive number, got '" << text << "'\n";
        return kExitInvalid;
      }
      cfg.eps_geom = v;
    }
  }
  app.add_option("--eps", cfg.eps_geom,
                 "geometric tolerance at unit diameter (env: CIRCUMGON_EPS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps-angle", cfg.eps_angle, "angle tolerance in radians")
      ->check(CLI::PositiveNumber);
  app.add_option("--tie-tol", cfg.tie_tol, "relative tolerance for equal-area ties")
      ->check(CLI::PositiveNumber);
  app.add_flag("--parallel", cfg.parallel, "use the OpenMP kernels");

  std::string input_path;
  std::string svg_path;
  bool all_optima = false;
  bool add_endpoints = false;
  bool lorenz_input = false;
  int n_arg = 0;
  bool compare = false;

  CLI::App* solve = app.add_subcommand("solve", "maximum-area polygon around a JSON polygon");
  solve->add_option("input", input_path, "polygon JSON file, or - for stdin")->required();
  solve->add_flag("--all-optima", all_optima, "enumerate equal-area U/N patterns");
  solve->add_option("--svg", svg_path, "also write an SVG scene to this file");

  CLI::App* gini_cmd = app.add_subcommand("gini", "Gini bounds from a p,L CSV file");
  gini_cmd->add_option("input", input_path, "CSV file, or - for stdin")->required();
  gini_cmd->add_flag("--add-endpoints", add_endpoints, "prepend (0,0) / append (1,1) if missing");
  gini_cmd->add_option("--svg", svg_path, "also write an SVG scene to this file");

  CLI::App* regular = app.add_subcommand("regular", "closed-form optimum for a regular n-gon");
  regular->add_option("--n", n_arg, "number of vertices")->required()->check(CLI::Range(5, 100000));
  regular->add_flag("--compare", compare, "also run the solver and report the difference");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive pattern enumeration (small inputs)");
  oracle_cmd->add_option("input", input_path, "polygon JSON (or CSV with --lorenz), - for stdin")
      ->required();
  oracle_cmd->add_flag("--lorenz", lorenz_input, "treat the input as p,L CSV");
  oracle_cmd->add_option("--limit", cfg.enum_limit, "refuse more than 2^limit patterns");

  CLI::App* farris = app.add_subcommand("farris", "circle-arc example data as p,L CSV");
  farris->add_option("--n", n_arg, "arc resolution, n = 4 (mod 8), n >= 12")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (solve->parsed()) {
      std::vector<geom::Point> pts = io::parse_polygon_json(read_input(input_path));
      geom::ConvexPolygon poly = geom::ConvexPolygon::from_vertices(std::move(pts));
      solver::Solution sol = solver::solve_max_area(poly, cfg, all_optima);
      if (!sol.ok) return verdict_exit(sol);
      std::cout << io::solution_json(sol);
      if (!svg_path.empty()) write_file(svg_path, io::polygon_scene_svg(poly, sol));
    } else if (gini_cmd->parsed()) {
      gini::LorenzData data = gini::parse_lorenz(read_input(input_path), add_endpoints,
                                                 cfg.eps_geom);
      gini::GiniBounds gb = gini::gini_bounds(data, cfg);
      std::cout << io::gini_json(gb);
      if (!svg_path.empty()) write_file(svg_path, io::gini_scene_svg(data, gb));
    } else if (regular->parsed()) {
      oracle::ClosedForm cf = oracle::regular_closed_form(n_arg);
      solver::Solution sol;
      if (compare) {
        sol = solver::solve_max_area(oracle::regular_ngon(n_arg), cfg);
        if (!sol.ok) return verdict_exit(sol);
      }
      std::cout << io::regular_json(n_arg, cf, compare ? &sol : nullptr);
    } else if (oracle_cmd->parsed()) {
      solver::SlotList slots;
      if (lorenz_input) {
        gini::LorenzData data =
            gini::parse_lorenz(read_input(input_path), add_endpoints, cfg.eps_geom);
        slots = gini::build_lorenz_slots(data, cfg.eps_geom);
      } else {
        std::vector<geom::Point> pts = io::parse_polygon_json(read_input(input_path));
        geom::ConvexPolygon poly = geom::ConvexPolygon::from_vertices(std::move(pts));
        slots = solver::SlotList::from_polygon(poly);
      }
      oracle::BruteForce bf = oracle::brute_force_max(slots, cfg);
      std::cout << io::oracle_json(bf, slots.size());
    } else if (farris->parsed()) {
      gini::LorenzData data = gini::farris_example(n_arg);
      std::cout << "p,L\n";
      char buf[80];
      for (const geom::Point& p : data.points) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.x, p.y);
        std::cout << buf;
      }
    }
  } catch (const oracle::LimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitTooLarge;
  } catch (const gini::LorenzError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  return kExitOk;
}
