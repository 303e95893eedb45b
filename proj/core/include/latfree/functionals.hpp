#pragma once

#include <cstddef>

#include "latfree/geometry.hpp"

namespace latfree {

struct Diameter {
  double value = 0.0;
  // Vertex indices attaining the diameter, first < second; lowest pair on ties.
  std::size_t first = 0;
  std::size_t second = 0;
};

struct Width {
  double value = 0.0;
  // Edge from vertex(edge) to vertex(edge + 1) and the farthest vertex from its line.
  std::size_t edge = 0;
  std::size_t vertex = 0;
};

struct Circle {
  Point center;
  double radius = 0.0;
};

/// The six classical functionals of a convex body together with their witnesses.
struct FunctionalReport {
  double perimeter = 0.0;
  double area = 0.0;
  Diameter diameter;
  Width width;
  Circle circumcircle;
  Circle incircle;

  double p() const { return perimeter; }
  double A() const { return area; }
  double D() const { return diameter.value; }
  double omega() const { return width.value; }
  double R() const { return circumcircle.radius; }
  double r() const { return incircle.radius; }
};

double area(const ConvexPolygon& polygon);
double perimeter(const ConvexPolygon& polygon);

/// Rotating calipers over antipodal vertex pairs.
Diameter diameter(const ConvexPolygon& polygon);

/// Minimal width via rotating calipers: min over edges of the farthest vertex distance.
Width width(const ConvexPolygon& polygon);

/// Minimal enclosing circle of the vertex set (randomized incremental, fixed seed).
Circle circumcircle(const ConvexPolygon& polygon);

/// Largest inscribed circle (Chebyshev center) by enumerating triples of edge constraints.
Circle incircle(const ConvexPolygon& polygon);

inline double circumradius(const ConvexPolygon& polygon) { return circumcircle(polygon).radius; }
inline double inradius(const ConvexPolygon& polygon) { return incircle(polygon).radius; }

FunctionalReport report(const ConvexPolygon& polygon);

/// Smallest circle with a and b on its boundary.
Circle circle_from(Point a, Point b);

/// Circle through a, b, c; for (near-)collinear input, the circle on the farthest pair.
Circle circle_from(Point a, Point b, Point c);

}  // namespace latfree
