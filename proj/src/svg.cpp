#include "circumgon/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace circumgon::io {

using geom::Point;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// y is negated so larger y renders upward; the viewBox accounts for it.
std::string path_d(const std::vector<Point>& pts, bool closed) {
  std::string d;
  for (size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M " : "L ");
    d += fmt(pts[i].x) + " " + fmt(-pts[i].y) + " ";
  }
  if (closed) d += "Z";
  return d;
}

struct SceneBuilder {
  double lox = 0, loy = 0, hix = 1, hiy = 1;
  bool has_bbox = false;
  std::string layers;

  void grow(const std::vector<Point>& pts) {
    for (const Point& p : pts) {
      if (!has_bbox) {
        lox = hix = p.x;
        loy = hiy = p.y;
        has_bbox = true;
      } else {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
      }
    }
  }

  void add_layer(const std::string& id, const std::vector<std::vector<Point>>& paths,
                 bool closed, const std::string& style) {
    layers += "  <g id=\"" + id + "\">\n";
    for (const std::vector<Point>& pts : paths) {
      if (pts.empty()) continue;
      grow(pts);
      layers += "    <path d=\"" + path_d(pts, closed) + "\" " + style + "/>\n";
    }
    layers += "  </g>\n";
  }

  std::string finish() const {
    double w = hix - lox, h = hiy - loy;
    double margin = 0.05 * std::max(w, h);
    double sw = 0.004 * std::max(w, h);  // stroke width
    std::string view = fmt(lox - margin) + " " + fmt(-(hiy + margin)) + " " +
                       fmt(w + 2 * margin) + " " + fmt(h + 2 * margin);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + view +
                      "\" width=\"640\" height=\"640\" stroke-width=\"" + fmt(sw) + "\">\n";
    out += layers;
    out += "</svg>\n";
    return out;
  }
};

}  // namespace

std::string polygon_scene_svg(const geom::ConvexPolygon& input, const solver::Solution& sol) {
  SceneBuilder sb;
  sb.add_layer("solution", {sol.polygon.vertices()}, true,
               "fill=\"#dbeafe\" stroke=\"#1d4ed8\"");
  std::vector<std::vector<Point>> regions;
  for (int i = 0; i < input.size(); ++i) {
    geom::ExternalRegion r = geom::external_region(input, i);
    if (r.bounded) regions.push_back({r.corner_start, r.corner_end, r.apex});
  }
  sb.add_layer("external-regions", regions, true,
               "fill=\"none\" stroke=\"#9ca3af\" stroke-dasharray=\"0.02\"");
  sb.add_layer("input", {input.vertices()}, true, "fill=\"#fde68a\" stroke=\"#b45309\"");
  return sb.finish();
}

std::string gini_scene_svg(const gini::LorenzData& data, const gini::GiniBounds& gb) {
  SceneBuilder sb;
  std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  sb.add_layer("frame", {square}, true, "fill=\"#f8fafc\" stroke=\"#64748b\"");
  sb.add_layer("diagonal", {{{0, 0}, {1, 1}}}, false,
               "fill=\"none\" stroke=\"#94a3b8\" stroke-dasharray=\"0.03\"");
  sb.add_layer("upper", {gb.upper_chain}, false, "fill=\"none\" stroke=\"#dc2626\"");
  sb.add_layer("lorenz", {data.points}, false, "fill=\"none\" stroke=\"#16a34a\"");
  return sb.finish();
}

}  // namespace circumgon::io
