#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the code
// paths it is used to check (calipers, incremental circle, triple enumeration).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "latfree/geometry.hpp"
#include "latfree/random.hpp"

namespace latfree::testing {

/// Points near a random ellipse with sorted angles; the hull keeps nearly all of them.
inline ConvexPolygon random_convex_polygon(Rng& rng, int max_vertices, double max_radius = 1.0) {
  for (;;) {
    const int n = 3 + static_cast<int>(rng.index(static_cast<std::size_t>(max_vertices - 2)));
    const double ax = rng.uniform(0.2, max_radius);
    const double ay = rng.uniform(0.2, max_radius);
    const double tilt = rng.uniform(0.0, std::numbers::pi);
    const Point c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double a : angles) {
      const double jitter = 1.0 + 1e-3 * rng.uniform(-1.0, 1.0);
      const Point e{jitter * ax * std::cos(a), jitter * ay * std::sin(a)};
      pts.push_back(c + Point{std::cos(tilt) * e.x - std::sin(tilt) * e.y,
                              std::sin(tilt) * e.x + std::cos(tilt) * e.y});
    }
    try {
      return convex_hull(pts);
    } catch (const std::exception&) {
    }
  }
}

inline bool in_triangle(Point p, Point a, Point b, Point c) {
  const double d1 = orient(a, b, p);
  const double d2 = orient(b, c, p);
  const double d3 = orient(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

/// Keeps a point iff no triangle of other points contains it. O(n^4).
inline std::vector<Point> brute_hull_vertices(const std::vector<Point>& pts) {
  std::vector<Point> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = false;
    for (std::size_t a = 0; a < n && !inside; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n && !inside; ++b) {
        if (b == i) continue;
        for (std::size_t c = b + 1; c < n && !inside; ++c) {
          if (c == i) continue;
          inside = in_triangle(pts[i], pts[a], pts[b], pts[c]);
        }
      }
    }
    if (!inside) out.push_back(pts[i]);
  }
  return out;
}

inline double all_pairs_diameter(const ConvexPolygon& p) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, distance(p[i], p[j]));
  }
  return best;
}

inline double brute_width(const ConvexPolygon& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point a = p[i];
    const Point b = p.vertex(i + 1);
    double far = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) far = std::max(far, orient(a, b, p[k]) / norm(b - a));
    best = std::min(best, far);
  }
  return best;
}

struct OracleCircle {
  double x, y, r;
};

/// Smallest circle among all pair-diameter and triple-circumscribed circles that cover every vertex.
inline OracleCircle brute_enclosing_circle(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  OracleCircle best{0, 0, std::numeric_limits<double>::infinity()};
  auto covers = [&](double x, double y, double r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (std::hypot(p[k].x - x, p[k].y - y) > r + 1e-12 * std::max(1.0, r)) return false;
    }
    return true;
  };
  auto offer = [&](double x, double y, double r) {
    if (r < best.r && covers(x, y, r)) best = {x, y, r};
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      offer(0.5 * (p[i].x + p[j].x), 0.5 * (p[i].y + p[j].y), 0.5 * distance(p[i], p[j]));
      for (std::size_t k = j + 1; k < n; ++k) {
        // Perpendicular-bisector intersection, written independently of circle_from.
        const double ax = p[i].x, ay = p[i].y, bx = p[j].x, by = p[j].y, cx = p[k].x, cy = p[k].y;
        const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if (std::abs(d) < 1e-14) continue;
        const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
        const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
        const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
        offer(ux, uy, std::hypot(ax - ux, ay - uy));
      }
    }
  }
  return best;
}

/// Depth of q inside P: min distance to the edge lines (negative outside).
inline double depth(const ConvexPolygon& p, Point q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point a = p[i];
    const Point b = p.vertex(i + 1);
    best = std::min(best, orient(a, b, q) / norm(b - a));
  }
  return best;
}

/// Max depth over a step-1e-2 grid of the bounding box, then refined with step 1e-3
/// around the best coarse node.
inline double grid_inradius(const ConvexPolygon& p) {
  double xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
  for (const Point& v : p.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  double best = -std::numeric_limits<double>::infinity();
  Point at{};
  for (double x = xmin; x <= xmax; x += 1e-2) {
    for (double y = ymin; y <= ymax; y += 1e-2) {
      const double d = depth(p, {x, y});
      if (d > best) {
        best = d;
        at = {x, y};
      }
    }
  }
  for (double x = at.x - 2e-2; x <= at.x + 2e-2; x += 1e-3) {
    for (double y = at.y - 2e-2; y <= at.y + 2e-2; y += 1e-3) best = std::max(best, depth(p, {x, y}));
  }
  return best;
}

inline bool same_vertex_cycle(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = distance(a[i], b.vertex(i + shift)) <= tol;
    if (ok) return true;
  }
  return false;
}

inline std::string data_path(const std::string& name) {
  return std::string(LATFREE_TEST_DATA_DIR) + "/" + name;
}

}  // namespace latfree::testing
