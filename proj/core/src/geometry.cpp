#include "latfree/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "latfree/errors.hpp"

namespace latfree {

HalfPlane::HalfPlane(Point normal, double offset) {
  const double length = norm(normal);
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DegenerateError("half-plane normal must be a finite non-zero vector");
  }
  normal_ = normal / length;
  offset_ = offset / length;
}

HalfPlane HalfPlane::left_of(Point a, Point b) {
  // Left of a->b means cross(b - a, p - a) >= 0, i.e. n . p <= n . a with n = (dy, -dx).
  const Point d = b - a;
  const Point n{d.y, -d.x};
  return HalfPlane(n, dot(n, a));
}

namespace {

double signed_area2(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += cross(v[i], v[(i + 1) % v.size()]);
  }
  return s;
}

void drop_duplicates(std::vector<Point>& v) {
  bool changed = true;
  while (changed && v.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t j = (i + 1) % v.size();
      if (distance(v[i], v[j]) <= kGeomEps) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
  }
}

// Removes vertices lying within kGeomEps of the line through their neighbours.
void drop_collinear(std::vector<Point>& v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = v[(i + n - 1) % n];
      const Point& b = v[i];
      const Point& c = v[(i + 1) % n];
      const double base = distance(a, c);
      const bool spike = base <= kGeomEps;
      if (spike || std::abs(orient(a, c, b)) / base <= kGeomEps) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        drop_duplicates(v);
        changed = true;
        break;
      }
    }
  }
}

enum class Canonical { kOk, kDegenerate, kNonConvex };

Canonical canonicalize(std::vector<Point>& v) {
  for (const Point& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return Canonical::kDegenerate;
  }
  drop_duplicates(v);
  if (v.size() < 3) return Canonical::kDegenerate;
  if (signed_area2(v) < 0.0) std::reverse(v.begin(), v.end());
  drop_collinear(v);
  if (v.size() < 3) return Canonical::kDegenerate;
  if (signed_area2(v) < 0.0) std::reverse(v.begin(), v.end());

  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0.0) return Canonical::kNonConvex;
  }
  // All-left turns still admit star polygons; a convex CCW fan from v[0] never turns right.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (orient(v[0], v[i], v[i + 1]) <= 0.0) return Canonical::kNonConvex;
  }
  return Canonical::kOk;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  switch (canonicalize(vertices)) {
    case Canonical::kDegenerate:
      throw DegenerateError("polygon needs at least 3 distinct non-collinear finite vertices");
    case Canonical::kNonConvex:
      throw ParameterError("vertices do not form a convex polygon in cyclic order");
    case Canonical::kOk:
      break;
  }
  vertices_ = std::move(vertices);
}

std::optional<ConvexPolygon> ConvexPolygon::try_make(std::vector<Point> vertices) {
  if (canonicalize(vertices) != Canonical::kOk) return std::nullopt;
  return ConvexPolygon(Validated{}, std::move(vertices));
}

ConvexPolygon convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateError("convex hull needs at least 3 distinct points");

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateError("all points are collinear");
  return ConvexPolygon(std::move(hull));
}

std::optional<ConvexPolygon> clip(const ConvexPolygon& polygon, const HalfPlane& half_plane) {
  const std::size_t n = polygon.size();
  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon.vertex(i + 1);
    const double da = half_plane.signed_distance(a);
    const double db = half_plane.signed_distance(b);
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  if (out.size() < 3) return std::nullopt;
  return ConvexPolygon::try_make(std::move(out));
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::optional<ConvexPolygon> current = p;
  for (const HalfPlane& h : edge_half_planes(q)) {
    current = clip(*current, h);
    if (!current) return std::nullopt;
  }
  return current;
}

bool contains_point(const ConvexPolygon& polygon, Point q, Containment mode, double margin) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e = polygon.edge(i);
    const double depth = cross(e, q - polygon[i]) / norm(e);
    if (mode == Containment::kStrict ? !(depth > margin) : depth < -margin) return false;
  }
  return true;
}

std::vector<HalfPlane> edge_half_planes(const ConvexPolygon& polygon) {
  std::vector<HalfPlane> planes;
  planes.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    planes.push_back(HalfPlane::left_of(polygon[i], polygon.vertex(i + 1)));
  }
  return planes;
}

BoundingBox bounding_box(const ConvexPolygon& polygon) {
  BoundingBox box{polygon[0], polygon[0]};
  for (const Point& p : polygon.vertices()) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

namespace {

// Chord of P along the line {p : p[axis] = level}, reported in the other coordinate.
std::optional<std::pair<double, double>> chord(const ConvexPolygon& polygon, double level,
                                               bool along_x) {
  auto along = [along_x](Point p) { return along_x ? p.x : p.y; };
  auto across = [along_x](Point p) { return along_x ? p.y : p.x; };
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon.vertex(i + 1);
    const double ca = across(a) - level;
    const double cb = across(b) - level;
    if (ca == 0.0) {
      lo = std::min(lo, along(a));
      hi = std::max(hi, along(a));
    }
    if ((ca < 0.0 && cb > 0.0) || (ca > 0.0 && cb < 0.0)) {
      const double v = along(a) + ca / (ca - cb) * (along(b) - along(a));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

}  // namespace

std::optional<std::pair<double, double>> horizontal_chord(const ConvexPolygon& polygon,
                                                          double height) {
  return chord(polygon, height, /*along_x=*/true);
}

std::optional<std::pair<double, double>> vertical_chord(const ConvexPolygon& polygon,
                                                        double abscissa) {
  return chord(polygon, abscissa, /*along_x=*/false);
}

ConvexPolygon translated(const ConvexPolygon& polygon, Point offset) {
  std::vector<Point> v(polygon.vertices().begin(), polygon.vertices().end());
  for (Point& p : v) p = p + offset;
  return ConvexPolygon(std::move(v));
}

ConvexPolygon scaled(const ConvexPolygon& polygon, double factor, Point center) {
  if (!(factor > 0.0)) throw ParameterError("scale factor must be positive");
  std::vector<Point> v(polygon.vertices().begin(), polygon.vertices().end());
  for (Point& p : v) p = center + factor * (p - center);
  return ConvexPolygon(std::move(v));
}

ConvexPolygon rotated(const ConvexPolygon& polygon, double angle, Point center) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point> v(polygon.vertices().begin(), polygon.vertices().end());
  for (Point& p : v) {
    const Point d = p - center;
    p = center + Point{c * d.x - s * d.y, s * d.x + c * d.y};
  }
  return ConvexPolygon(std::move(v));
}

}  // namespace latfree
