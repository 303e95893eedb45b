#include "latfree/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "latfree/random.hpp"

namespace latfree {

double area(const ConvexPolygon& polygon) {
  double s = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    s += cross(polygon[i], polygon.vertex(i + 1));
  }
  return 0.5 * s;
}

double perimeter(const ConvexPolygon& polygon) {
  double s = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) s += norm(polygon.edge(i));
  return s;
}

Diameter diameter(const ConvexPolygon& polygon) {
  const std::size_t n = polygon.size();
  Diameter best{-1.0, 0, 0};
  auto consider = [&](std::size_t a, std::size_t b) {
    a %= n;
    b %= n;
    if (a == b) return;
    if (a > b) std::swap(a, b);
    const double d = distance(polygon[a], polygon[b]);
    if (d > best.value ||
        (d == best.value && std::pair{a, b} < std::pair{best.first, best.second})) {
      best = {d, a, b};
    }
  };

  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon.vertex(i + 1);
    for (std::size_t guard = 0; guard < n; ++guard) {
      if (orient(a, b, polygon.vertex(j + 1)) > orient(a, b, polygon.vertex(j))) {
        j = (j + 1) % n;
      } else {
        break;
      }
    }
    consider(i, j);
    consider(i + 1, j);
    consider(i, j + 1);
    consider(i + 1, j + 1);
  }
  return best;
}

Width width(const ConvexPolygon& polygon) {
  const std::size_t n = polygon.size();
  Width best{INFINITY, 0, 0};
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon.vertex(i + 1);
    for (std::size_t guard = 0; guard < n; ++guard) {
      if (orient(a, b, polygon.vertex(j + 1)) > orient(a, b, polygon.vertex(j))) {
        j = (j + 1) % n;
      } else {
        break;
      }
    }
    const double h = orient(a, b, polygon[j]) / norm(b - a);
    if (h < best.value) best = {h, i, j};
  }
  return best;
}

Circle circle_from(Point a, Point b) {
  const Point c = 0.5 * (a + b);
  return {c, 0.5 * distance(a, b)};
}

Circle circle_from(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) <= 1e-14 * norm(ab) * norm(ac)) {
    const double dab = distance(a, b);
    const double dac = distance(a, c);
    const double dbc = distance(b, c);
    if (dab >= dac && dab >= dbc) return circle_from(a, b);
    if (dac >= dbc) return circle_from(a, c);
    return circle_from(b, c);
  }
  const double lab = dot(ab, ab);
  const double lac = dot(ac, ac);
  const Point u{(ac.y * lab - ab.y * lac) / d, (ab.x * lac - ac.x * lab) / d};
  return {a + u, norm(u)};
}

namespace {

bool encloses(const Circle& c, Point p) {
  return distance(c.center, p) <= c.radius + 1e-14 * std::max(1.0, c.radius);
}

}  // namespace

Circle circumcircle(const ConvexPolygon& polygon) {
  std::vector<Point> pts(polygon.vertices().begin(), polygon.vertices().end());
  // Fixed seed keeps the function pure; expected linear time holds for any fixed order
  // that is independent of the input geometry.
  Rng rng(0x5eed);
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.index(i)]);

  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (encloses(c, pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (encloses(c, pts[j])) continue;
      c = circle_from(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!encloses(c, pts[k])) c = circle_from(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

Circle incircle(const ConvexPolygon& polygon) {
  const std::vector<HalfPlane> planes = edge_half_planes(polygon);
  const std::size_t n = planes.size();
  const BoundingBox box = bounding_box(polygon);
  const double scale =
      std::max({1.0, std::abs(box.min.x), std::abs(box.min.y), std::abs(box.max.x),
                std::abs(box.max.y)});
  const double tol = 1e-12 * scale;

  Circle best{{}, -INFINITY};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // Solve n.x + t = c for the three active constraints by Cramer's rule.
        const std::array<const HalfPlane*, 3> h{&planes[i], &planes[j], &planes[k]};
        const double a1 = h[0]->normal().x, b1 = h[0]->normal().y, c1 = h[0]->offset();
        const double a2 = h[1]->normal().x, b2 = h[1]->normal().y, c2 = h[1]->offset();
        const double a3 = h[2]->normal().x, b3 = h[2]->normal().y, c3 = h[2]->offset();
        const double det = a1 * (b2 - b3) - b1 * (a2 - a3) + (a2 * b3 - a3 * b2);
        if (std::abs(det) < 1e-12) continue;
        const double t = (a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) +
                          c1 * (a2 * b3 - a3 * b2)) / det;
        if (!(t > best.radius)) continue;
        const double x = (c1 * (b2 - b3) - b1 * (c2 - c3) + (c2 * b3 - c3 * b2)) / det;
        const double y = (a1 * (c2 - c3) - c1 * (a2 - a3) + (a2 * c3 - a3 * c2)) / det;
        const Point center{x, y};
        bool feasible = true;
        for (const HalfPlane& plane : planes) {
          if (plane.signed_distance(center) + t > tol) {
            feasible = false;
            break;
          }
        }
        if (feasible) best = {center, t};
      }
    }
  }
  return best;
}

FunctionalReport report(const ConvexPolygon& polygon) {
  FunctionalReport out;
  out.perimeter = perimeter(polygon);
  out.area = area(polygon);
  out.diameter = diameter(polygon);
  out.width = width(polygon);
  out.circumcircle = circumcircle(polygon);
  out.incircle = incircle(polygon);
  return out;
}

}  // namespace latfree
