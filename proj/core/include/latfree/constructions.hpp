#pragma once

#include <cstdint>
#include <span>

#include "latfree/geometry.hpp"

namespace latfree {

/// Base vertices (-left, 0) and (right + 1, 0) of the normalized triangle whose
/// chord at height 1 is the unit segment from (0, 1) to (1, 1).
///
/// Admissible parameters satisfy left <= right (mirror symmetry) and
/// left >= sqrt(right^2 + 1) - right (the base is a longest edge), which
/// together force right >= 1/sqrt(3).
/// Smallest admissible `right`, 1/sqrt(3).
inline constexpr double kMinAdmissibleRight = 0.57735026918962576451;

struct LrTriangleParams {
  double left = 0.0;
  double right = 0.0;

  bool admissible(double tol = kGeomEps) const;
};

/// The rhombus/square configuration bounding the perimeter of an unconditional body.
struct QQPrimeInstance {
  double slope = 0.0;              // of the supporting line L through the origin
  double circumradius = 0.0;       // R' of the normalized body
  ConvexPolygon rhombus;           // Q, bounded by L and its three reflections
  ConvexPolygon square;            // Q' = (1/2, 1/2) + R'[-1, 1]^2
  ConvexPolygon intersection;      // Q n Q'
  double intersection_perimeter = 0.0;
  double rectangle_perimeter = 0.0;  // p((1/2,1/2) + [-R',R'] x [-1/2,1/2]) = 4R' + 2
  Point m;                         // L meets the bottom of [0,1/2] x [1/2-R', 0]
  Point n;                         // L meets the boundary of Q' with n.x <= 0
  double a = 0.0, big_a = 0.0, big_b_prime = 0.0;
  double b = 0.0, big_b = 0.0, big_c = 0.0;
};

struct AbcLemma {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool holds = false;
  // The three equivalent forms of the lemma evaluated as predicates.
  bool original_form = false;  // a + b <= A + B + C
  bool root_form = false;      // sqrt(A^2 + B'^2)(A + B) <= A^2 + AB + BB'
  bool final_form = false;     // AB' + 2BB' <= 2AB + 2B^2
};

struct Scaling {
  double factor;
  ConvexPolygon polygon;
};

/// Equilateral lattice-free triangle with edge 1 + 2/sqrt(3), touching (0,0), (1,0), (0,1), (1,1).
ConvexPolygon equilateral_extremizer();

/// K_n = conv{(+-n, 0), (+-n, 1)}.
ConvexPolygon kn_family(int n);

/// ((2R-1)/(2R)) (p - 4R) on K_n, with R = sqrt(n^2 + 1/4) and p = 4n + 2. Tends to 2.
double kn_thm3_value(int n);

ConvexPolygon triangle_lr(const LrTriangleParams& params);

/// p - 2D of triangle_lr(params) in closed form.
double lr_objective(const LrTriangleParams& params);

/// Width of triangle_lr(params): (left + right + 1) / (left + right).
double lr_width(const LrTriangleParams& params);

/// Dilation (about the origin) by (omega + D) / (omega D), making the chord at
/// distance 1 from the longest edge have unit length.
Scaling lambda_scale(const ConvexPolygon& triangle);

/// sqrt(r^2 + 1) - r; non-increasing.
double f_defect(double r);

/// sqrt(f(r)^2 + 1); non-increasing with g(1/sqrt3) = 2/sqrt3.
double g_bound(double r);

/// Builds Q, Q' and the segment lengths for a supporting line y = slope * x.
///
/// Admissible when slope < 0, R' >= sqrt(2)/2, the vertices of Q on x = 1/2 are
/// outside int Q' (1 + |slope| >= 2R'), and L leaves Q' through its left side
/// (|slope| (R' - 1/2) <= R' + 1/2). Throws ParameterError otherwise.
QQPrimeInstance q_qprime(double slope, double circumradius);

bool q_qprime_admissible(double slope, double circumradius);

/// Throws ParameterError unless A > 0, B > 0 and 0 < B' <= B.
AbcLemma abc_lemma(double big_a, double big_b, double big_b_prime);

/// Hull of the orbit of `arc` (offsets from z in the closed positive quadrant)
/// under the reflections about z + lin{e1} and z + lin{e2}.
ConvexPolygon unconditionalize(std::span<const Point> arc, Point center);

/// Steiner symmetral about the horizontal line y = axis.
ConvexPolygon steiner_symmetrize(const ConvexPolygon& polygon, double axis);

/// Hull of k random points, moved to a random cell offset and maximally scaled
/// about its incenter while staying lattice-free. Deterministic per seed.
ConvexPolygon random_lattice_free(std::uint64_t seed, int k);

}  // namespace latfree
