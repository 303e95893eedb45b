#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latfree/geometry.hpp"

namespace latfree {

/// Default depth below which a boundary-touching lattice point still counts as outside.
inline constexpr double kLatticeMargin = 1e-9;

struct LatticeStatus {
  bool lattice_free = true;
  double margin = kLatticeMargin;
  std::vector<Point> interior_points;
  // Lattice points within `margin` of the boundary (closed but not strictly inside).
  std::vector<Point> boundary_points;
};

/// Center z and the residuals of the reflections about z + lin{e1} and z + lin{e2}.
struct UnconditionalityCertificate {
  Point center;
  double horizontal_axis_residual = 0.0;
  double vertical_axis_residual = 0.0;
};

struct ScaledPolygon {
  double factor;
  ConvexPolygon polygon;
};

/// Integer points of the bounding box accepted by contains_point, sorted by (x, y).
std::vector<Point> lattice_points_in(const ConvexPolygon& polygon, Containment mode,
                                     double margin = kLatticeMargin);

LatticeStatus is_lattice_free(const ConvexPolygon& polygon, double margin = kLatticeMargin);

/// Early-exit check used by the scaling search; agrees with is_lattice_free(...).lattice_free.
bool has_interior_lattice_point(const ConvexPolygon& polygon, double margin = kLatticeMargin);

std::optional<UnconditionalityCertificate> is_unconditional(const ConvexPolygon& polygon,
                                                            double tol = kGeomEps);

/// Largest factor in (0, max_factor] keeping center + factor * (P - center) lattice-free.
///
/// Lattice-freeness is monotone in the factor because `center` lies in P, so the
/// answer is bracketed by doubling and refined by bisection to a relative 1e-9.
/// Throws InfeasibleError when a 1e-6 copy already contains a lattice point and
/// ParameterError when `center` is not strictly inside P.
ScaledPolygon max_lattice_free_scale(const ConvexPolygon& polygon, Point center,
                                     double margin = kLatticeMargin, double max_factor = 1e6);

}  // namespace latfree
