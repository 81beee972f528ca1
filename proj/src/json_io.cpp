#include "circumgon/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace circumgon::io {

using json = nlohmann::ordered_json;

double round_sig(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json points_json(const std::vector<geom::Point>& pts) {
  json arr = json::array();
  for (const geom::Point& p : pts) arr.push_back({round_sig(p.x), round_sig(p.y)});
  return arr;
}

}  // namespace

std::vector<geom::Point> parse_polygon_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("expected an object with a \"vertices\" array");
  std::vector<geom::Point> pts;
  for (const json& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw std::invalid_argument("each vertex must be a [x, y] number pair");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return pts;
}

std::string solution_json(const solver::Solution& sol) {
  json doc;
  doc["area"] = round_sig(sol.area);
  doc["polygon"] = points_json(sol.polygon.vertices());
  doc["un_sequence"] = sol.un_sequence;
  json cls = json::array();
  for (solver::VertexRole r : sol.classification)
    cls.push_back(r == solver::VertexRole::kMidpoint ? "MIDPOINT" : "USED");
  doc["classification"] = cls;
  doc["family"] = sol.family;
  doc["ties"] = sol.ties;
  return doc.dump(2) + "\n";
}

std::string gini_json(const gini::GiniBounds& gb) {
  json doc;
  doc["lower"] = round_sig(gb.lower);
  doc["upper"] = round_sig(gb.upper);
  doc["lower_chain"] = points_json(gb.lower_chain);
  doc["upper_chain"] = points_json(gb.upper_chain);
  doc["pattern"] = gb.pattern;
  doc["phantom_bottom_used"] = gb.phantom_bottom_used;
  doc["phantom_right_used"] = gb.phantom_right_used;
  return doc.dump(2) + "\n";
}

std::string oracle_json(const oracle::BruteForce& bf, int slot_count) {
  json doc;
  doc["optional_slots"] = bf.optional_slots;
  doc["pattern_count"] = bf.table.size();
  doc["best_mask"] = bf.best_mask;
  doc["best_area"] = round_sig(bf.best_area);
  doc["best_pattern"] = bf.found ? bf.pattern_of(bf.best_mask, slot_count) : "";
  constexpr size_t kTableCap = 4096;
  if (bf.table.size() <= kTableCap) {
    json table = json::array();
    for (const oracle::PatternResult& r : bf.table) {
      json row;
      row["mask"] = r.mask;
      row["feasible"] = r.feasible;
      row["family"] = r.family;
      row["area"] = r.feasible ? round_sig(r.area) : 0.0;
      table.push_back(row);
    }
    doc["table"] = table;
  } else {
    doc["table_omitted"] = true;
  }
  return doc.dump(2) + "\n";
}

std::string regular_json(int n, const oracle::ClosedForm& cf,
                         const solver::Solution* compare) {
  json doc;
  doc["n"] = n;
  doc["closed_form_area"] = round_sig(cf.area);
  doc["pattern"] = cf.pattern;
  if (compare) {
    doc["solver_area"] = round_sig(compare->area);
    double rel = std::abs(compare->area - cf.area) / cf.area;
    doc["rel_diff"] = round_sig(rel);
    doc["solver_un_sequence"] = compare->un_sequence;
  }
  return doc.dump(2) + "\n";
}

}  // namespace circumgon::io
