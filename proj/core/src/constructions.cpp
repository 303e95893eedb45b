#include "latfree/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "latfree/errors.hpp"
#include "latfree/functionals.hpp"
#include "latfree/lattice.hpp"
#include "latfree/random.hpp"

namespace latfree {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

bool LrTriangleParams::admissible(double tol) const {
  return std::isfinite(left) && std::isfinite(right) && left >= 0.0 && right >= 0.0 &&
         left <= right + tol && left >= f_defect(right) - tol;
}

ConvexPolygon equilateral_extremizer() {
  return ConvexPolygon({{-1.0 / kSqrt3, 0.0}, {1.0 + 1.0 / kSqrt3, 0.0}, {0.5, 1.0 + kSqrt3 / 2}});
}

ConvexPolygon kn_family(int n) {
  if (n < 1) throw ParameterError("K_n needs n >= 1");
  const double x = n;
  return ConvexPolygon({{-x, 0.0}, {x, 0.0}, {x, 1.0}, {-x, 1.0}});
}

double kn_thm3_value(int n) {
  if (n < 1) throw ParameterError("K_n needs n >= 1");
  const double x = n;
  const double two_r = 2.0 * std::sqrt(x * x + 0.25);
  // 4n + 2 - 4 sqrt(n^2 + 1/4) rewritten without cancellation.
  const double excess = 2.0 - 2.0 / (two_r + 2.0 * x);
  return (two_r - 1.0) / two_r * excess;
}

ConvexPolygon triangle_lr(const LrTriangleParams& params) {
  if (!params.admissible()) {
    throw ParameterError("triangle parameters need 0 <= left <= right and "
                         "left >= sqrt(right^2 + 1) - right");
  }
  const double l = params.left;
  const double r = params.right;
  return ConvexPolygon({{-l, 0.0}, {r + 1.0, 0.0}, {l / (l + r), (l + r + 1.0) / (l + r)}});
}

double lr_width(const LrTriangleParams& params) {
  const double s = params.left + params.right;
  return (s + 1.0) / s;
}

double lr_objective(const LrTriangleParams& params) {
  if (!params.admissible()) throw ParameterError("inadmissible triangle parameters");
  return lr_width(params) * (f_defect(params.right) + f_defect(params.left));
}

Scaling lambda_scale(const ConvexPolygon& triangle) {
  if (triangle.size() != 3) throw DegenerateError("lambda_scale expects a triangle");
  const double w = width(triangle).value;
  const double d = diameter(triangle).value;
  if (!(w > 0.0) || !(d > 0.0)) throw DegenerateError("triangle has zero width");
  const double factor = (w + d) / (w * d);
  return {factor, scaled(triangle, factor)};
}

double f_defect(double r) { return std::sqrt(r * r + 1.0) - r; }

double g_bound(double r) {
  const double f = f_defect(r);
  return std::sqrt(f * f + 1.0);
}

bool q_qprime_admissible(double slope, double circumradius) {
  const double m = -slope;
  const double rp = circumradius;
  return std::isfinite(slope) && std::isfinite(rp) && slope < 0.0 &&
         rp >= std::sqrt(0.5) - kGeomEps && 1.0 + m >= 2.0 * rp - kGeomEps &&
         m * (rp - 0.5) <= rp + 0.5 + kGeomEps;
}

QQPrimeInstance q_qprime(double slope, double circumradius) {
  if (!q_qprime_admissible(slope, circumradius)) {
    throw ParameterError("q_qprime: need slope < 0, R' >= sqrt(2)/2, 1 + |slope| >= 2R' "
                         "and |slope| (R' - 1/2) <= R' + 1/2");
  }
  const double m = slope;
  const double rp = circumradius;
  const Point center{0.5, 0.5};

  // L: y = m x, with reflections through (1,1), (0,1) and (1,0); Q is their rhombus.
  ConvexPolygon rhombus({{0.5, 0.5 * m},
                         {1.0 - 0.5 / m, 0.5},
                         {0.5, 1.0 - 0.5 * m},
                         {0.5 / m, 0.5}});
  ConvexPolygon square({center + Point{-rp, -rp}, center + Point{rp, -rp},
                        center + Point{rp, rp}, center + Point{-rp, rp}});
  std::optional<ConvexPolygon> both = intersect(rhombus, square);
  if (!both) throw ParameterError("Q and Q' do not overlap");

  // Exit points of L from the box [0,1/2] x [1/2-R',0] (downwards) and from Q' (upwards).
  // Coordinates on the exit side are written exactly.
  const Point m_point = (0.5 - rp) / m < 0.5 ? Point{(0.5 - rp) / m, 0.5 - rp}
                                             : Point{0.5, 0.5 * m};
  const Point n_point = (0.5 + rp) / -m < rp - 0.5 ? Point{(0.5 + rp) / m, 0.5 + rp}
                                                  : Point{0.5 - rp, m * (0.5 - rp)};

  QQPrimeInstance out{slope,
                      rp,
                      rhombus,
                      square,
                      *both,
                      perimeter(*both),
                      4.0 * rp + 2.0,
                      m_point,
                      n_point};
  out.a = norm(m_point);
  out.big_a = std::abs(m_point.x);
  out.big_b_prime = std::abs(m_point.y);
  out.b = norm(n_point);
  out.big_b = std::abs(n_point.x);
  out.big_c = std::abs(n_point.y);
  return out;
}

AbcLemma abc_lemma(double big_a, double big_b, double big_b_prime) {
  if (!(big_a > 0.0) || !(big_b > 0.0) || !(big_b_prime > 0.0) || big_b_prime > big_b) {
    throw ParameterError("abc_lemma needs A > 0, B > 0 and 0 < B' <= B");
  }
  const double A = big_a, B = big_b, Bp = big_b_prime;
  AbcLemma out;
  out.c = B * Bp / A;
  out.b = std::sqrt(B * B + out.c * out.c);
  out.a = out.b * A / B;
  out.holds = out.a + out.b <= A + B + out.c + 1e-12;
  out.original_form = out.a + out.b <= A + B + out.c;
  out.root_form = std::sqrt(A * A + Bp * Bp) * (A + B) <= A * A + A * B + B * Bp;
  out.final_form = A * Bp + 2 * B * Bp <= 2 * A * B + 2 * B * B;
  return out;
}

ConvexPolygon unconditionalize(std::span<const Point> arc, Point center) {
  bool positive_x = false;
  bool positive_y = false;
  std::vector<Point> orbit;
  orbit.reserve(4 * arc.size());
  for (const Point& p : arc) {
    if (p.x < 0.0 || p.y < 0.0) {
      throw ParameterError("arc offsets must lie in the closed positive quadrant");
    }
    positive_x = positive_x || p.x > kGeomEps;
    positive_y = positive_y || p.y > kGeomEps;
    for (double sx : {1.0, -1.0}) {
      for (double sy : {1.0, -1.0}) orbit.push_back(center + Point{sx * p.x, sy * p.y});
    }
  }
  if (!positive_x || !positive_y) {
    throw DegenerateError("arc needs a strictly positive offset in each coordinate");
  }
  return convex_hull(orbit);
}

ConvexPolygon steiner_symmetrize(const ConvexPolygon& polygon, double axis) {
  std::vector<Point> pts;
  pts.reserve(2 * polygon.size());
  for (const Point& v : polygon.vertices()) {
    const auto chord = vertical_chord(polygon, v.x);
    const double half = chord ? 0.5 * (chord->second - chord->first) : 0.0;
    pts.push_back({v.x, axis - half});
    pts.push_back({v.x, axis + half});
  }
  return convex_hull(pts);
}

ConvexPolygon random_lattice_free(std::uint64_t seed, int k) {
  if (k < 3) throw ParameterError("random_lattice_free needs k >= 3");
  Rng rng(seed);
  for (;;) {
    std::vector<Point> pts(static_cast<std::size_t>(k));
    for (Point& p : pts) p = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    const Point offset{rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)};
    try {
      const ConvexPolygon hull = convex_hull(pts);
      const ConvexPolygon placed = translated(hull, offset - incircle(hull).center);
      return max_lattice_free_scale(placed, offset).polygon;
    } catch (const DegenerateError&) {
      // collinear draw; resample
    }
  }
}

}  // namespace latfree
