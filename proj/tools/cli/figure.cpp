#include "figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "latfree/functionals.hpp"

namespace latfree::cli {

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Box {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;

  void add(Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  void add(const ConvexPolygon& polygon) {
    for (const Point& p : polygon.vertices()) add(p);
  }
  void add(const Circle& c) {
    add(c.center - Point{c.radius, c.radius});
    add(c.center + Point{c.radius, c.radius});
  }
};

// SVG y grows downwards.
Point flip(Point p) { return {p.x, -p.y}; }

std::string path(const ConvexPolygon& polygon, const char* cls) {
  std::ostringstream out;
  out << "<path class=\"" << cls << "\" d=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point p = flip(polygon[i]);
    out << (i == 0 ? "M " : " L ") << num(p.x) << ' ' << num(p.y);
  }
  out << " Z\"/>\n";
  return out.str();
}

std::string circle(const Circle& c, const char* cls) {
  const Point p = flip(c.center);
  return "<circle class=\"" + std::string(cls) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
         "\" r=\"" + num(c.radius) + "\"/>\n";
}

std::string segment(Point a, Point b, const char* label, double font) {
  const Point fa = flip(a);
  const Point fb = flip(b);
  const Point mid = 0.5 * (fa + fb);
  return "<line class=\"segment\" x1=\"" + num(fa.x) + "\" y1=\"" + num(fa.y) + "\" x2=\"" +
         num(fb.x) + "\" y2=\"" + num(fb.y) + "\"/>\n<text class=\"label\" x=\"" + num(mid.x) +
         "\" y=\"" + num(mid.y) + "\" font-size=\"" + num(font) + "\">" + label + "</text>\n";
}

}  // namespace

std::string emit_figure(const ConvexPolygon& polygon, const FigureOptions& options) {
  Box box;
  box.add(polygon);
  Circle outer{};
  Circle inner{};
  if (options.circles) {
    outer = circumcircle(polygon);
    inner = incircle(polygon);
    box.add(outer);
  }
  if (options.overlay) {
    box.add(options.overlay->rhombus);
    box.add(options.overlay->square);
    box.add(Point{0.0, 0.0});
  }
  const double pad = 0.1 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;
  const double w = box.x1 - box.x0;
  const double h = box.y1 - box.y0;
  const double stroke = 0.005 * std::max(w, h);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.x0) << ' '
      << num(-box.y1) << ' ' << num(w) << ' ' << num(h) << "\" stroke-width=\"" << num(stroke)
      << "\">\n";

  if (options.overlay) {
    const QQPrimeInstance& q = *options.overlay;
    out << path(q.square, "square") << path(q.rhombus, "rhombus");
    const double font = 0.04 * std::max(w, h);
    const Point origin{0.0, 0.0};
    out << segment(origin, q.m, "a", font)
        << segment(origin, {q.m.x, 0.0}, "A", font)
        << segment({q.m.x, 0.0}, q.m, "B'", font)
        << segment(origin, q.n, "b", font)
        << segment(origin, {q.n.x, 0.0}, "B", font)
        << segment({q.n.x, 0.0}, q.n, "C", font);
  }
  out << path(polygon, "polygon");
  if (options.circles) out << circle(outer, "circumcircle") << circle(inner, "incircle");
  if (options.lattice) {
    const double dot = 0.01 * std::max(w, h);
    for (double x = std::ceil(box.x0); x <= box.x1; x += 1.0) {
      for (double y = std::ceil(box.y0); y <= box.y1; y += 1.0) {
        out << circle({{x, y}, dot}, "lattice");
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace latfree::cli
