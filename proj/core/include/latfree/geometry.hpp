#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace latfree {

/// Tolerance (lattice units) for collinearity, containment and normalization.
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Twice the signed area of (a, b, c); positive for a left turn.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// The closed half-plane {p : normal . p <= offset} with a unit normal.
class HalfPlane {
 public:
  /// Normalizes `normal`; throws DegenerateError for a zero normal.
  HalfPlane(Point normal, double offset);

  /// Half-plane to the left of the directed line a -> b.
  static HalfPlane left_of(Point a, Point b);

  Point normal() const { return normal_; }
  double offset() const { return offset_; }

  /// Positive outside, negative inside, in lattice units.
  double signed_distance(Point p) const { return dot(normal_, p) - offset_; }

 private:
  Point normal_;
  double offset_;
};

/// A bounded convex polygon with strictly convex, counter-clockwise vertices.
///
/// Construction accepts either orientation, merges duplicate and collinear
/// vertices within kGeomEps, and rejects non-convex or degenerate input.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  /// Same as the constructor but returns nullopt for degenerate input.
  static std::optional<ConvexPolygon> try_make(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Edge i runs from vertex(i) to vertex(i + 1).
  Point edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

 private:
  struct Validated {};
  ConvexPolygon(Validated, std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point> vertices_;
};

struct BoundingBox {
  Point min;
  Point max;
};

enum class Containment { kStrict, kClosed };

/// Andrew's monotone chain; throws DegenerateError when all points are collinear.
ConvexPolygon convex_hull(std::span<const Point> points);

std::optional<ConvexPolygon> clip(const ConvexPolygon& polygon, const HalfPlane& half_plane);

/// P clipped by every edge half-plane of Q; nullopt when the interior is empty.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);

/// Strict: signed depth > margin inside every edge line. Closed: depth >= -margin.
bool contains_point(const ConvexPolygon& polygon, Point q, Containment mode, double margin = 0.0);

std::vector<HalfPlane> edge_half_planes(const ConvexPolygon& polygon);

BoundingBox bounding_box(const ConvexPolygon& polygon);

/// Interval [lo, hi] of x-coordinates of P on the horizontal line y = height.
std::optional<std::pair<double, double>> horizontal_chord(const ConvexPolygon& polygon, double height);

/// Interval [lo, hi] of y-coordinates of P on the vertical line x = abscissa.
std::optional<std::pair<double, double>> vertical_chord(const ConvexPolygon& polygon, double abscissa);

ConvexPolygon translated(const ConvexPolygon& polygon, Point offset);

/// center + factor * (P - center); factor must be positive.
ConvexPolygon scaled(const ConvexPolygon& polygon, double factor, Point center = {});

ConvexPolygon rotated(const ConvexPolygon& polygon, double angle, Point center = {});

}  // namespace latfree
