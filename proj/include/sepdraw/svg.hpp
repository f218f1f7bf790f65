#pragma once

// SVG rendering of drawings. Output depends only on the drawing and the
// options (no timestamps, fixed number formatting).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sepdraw/drawing.hpp"
#include "sepdraw/geometry.hpp"

namespace sepdraw::svg {

struct Outline {
  std::vector<Point> points;  // hull is taken of these
  int level = 0;
};

struct Options {
  double size = 800.0;
  bool mark_crossings = false;
  bool labels = false;
  std::vector<Outline> outlines;
  /// extra points drawn faintly (e.g. the unused part of a point set)
  std::vector<Point> background;
};

inline std::string render(const StraightLineDrawing& d, const Options& opt = {}) {
  std::vector<Point> all = d.placement();
  all.insert(all.end(), opt.background.begin(), opt.background.end());
  for (const auto& o : opt.outlines) all.insert(all.end(), o.points.begin(), o.points.end());
  std::int64_t minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!all.empty()) {
    minx = maxx = all[0].x;
    miny = maxy = all[0].y;
    for (const auto& p : all) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double span = static_cast<double>(std::max<std::int64_t>({maxx - minx, maxy - miny, 1}));
  const double margin = 20.0;
  const double scale = (opt.size - 2 * margin) / span;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  // y grows upwards in the drawing, downwards in SVG
  auto sx = [&](const Point& p) { return num(margin + static_cast<double>(p.x - minx) * scale); };
  auto sy = [&](const Point& p) { return num(opt.size - margin - static_cast<double>(p.y - miny) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opt.size) << "\" height=\"" << num(opt.size)
     << "\" viewBox=\"0 0 " << num(opt.size) << ' ' << num(opt.size) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
  for (const auto& o : opt.outlines) {
    const auto hull = convex_hull(o.points);
    if (hull.empty()) continue;
    os << "<polygon fill=\"none\" stroke=\"" << kPalette[static_cast<std::size_t>(o.level) % 6]
       << "\" stroke-dasharray=\"4 3\" stroke-width=\"1\" points=\"";
    for (const auto& p : hull) os << sx(p) << ',' << sy(p) << ' ';
    os << "\"/>\n";
  }
  for (const auto& p : opt.background)
    os << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"1\" fill=\"#cccccc\"/>\n";
  const auto& g = d.graph();
  for (const auto& e : g.edges()) {
    const auto [a, b] = d.segment(e);
    os << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
       << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  if (opt.mark_crossings) {
    for (const auto& [i, j] : crossing_edge_pairs(d)) {
      const auto [a, b] = d.segment(g.edges()[i]);
      const auto [c, e] = d.segment(g.edges()[j]);
      // intersection point of the two segments, for display only
      const double d1x = static_cast<double>(b.x - a.x), d1y = static_cast<double>(b.y - a.y);
      const double d2x = static_cast<double>(e.x - c.x), d2y = static_cast<double>(e.y - c.y);
      const double den = d1x * d2y - d1y * d2x;
      if (den == 0) continue;
      const double t = (static_cast<double>(c.x - a.x) * d2y - static_cast<double>(c.y - a.y) * d2x) / den;
      const double px = margin + (static_cast<double>(a.x - minx) + t * d1x) * scale;
      const double py = opt.size - margin - (static_cast<double>(a.y - miny) + t * d1y) * scale;
      os << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& p = d.placement()[i];
    os << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"3\" fill=\"black\"/>\n";
    if (opt.labels)
      os << "<text x=\"" << sx(p) << "\" y=\"" << sy(p) << "\" dx=\"4\" dy=\"-4\" font-size=\"10\">" << g.id_at(i)
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sepdraw::svg
