#include "latfree/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "latfree/errors.hpp"

namespace latfree {

namespace {

// A raw CCW convex vertex cycle, swept along whichever axis is shorter. Works
// without ConvexPolygon so that tiny scaled copies skip collinearity cleanup.
class RowSweep {
 public:
  explicit RowSweep(std::span<const Point> v) : v_(v.begin(), v.end()) {
    const auto [xmin, xmax] = std::minmax_element(v_.begin(), v_.end(),
                                                  [](Point a, Point b) { return a.x < b.x; });
    const auto [ymin, ymax] = std::minmax_element(v_.begin(), v_.end(),
                                                  [](Point a, Point b) { return a.y < b.y; });
    transposed_ = ymax->y - ymin->y > xmax->x - xmin->x;
    lo_ = transposed_ ? xmin->x : ymin->y;
    hi_ = transposed_ ? xmax->x : ymax->y;
    if (transposed_) {
      for (Point& p : v_) p = {p.y, p.x};
      std::reverse(v_.begin(), v_.end());
    }
  }

  // Calls visit(x, y) in swept coordinates for every integer candidate whose
  // signed depth can reach `depth` (positive inside); stops once visit returns true.
  template <class Visit>
  bool for_each_candidate(double depth, Visit visit) const {
    const std::size_t n = v_.size();
    for (double y = std::ceil(lo_ - std::max(0.0, -depth)); y <= hi_ + std::max(0.0, -depth);
         y += 1.0) {
      double lo = -INFINITY;
      double hi = INFINITY;
      bool empty = false;
      for (std::size_t i = 0; i < n && !empty; ++i) {
        const Point& a = v_[i];
        const Point e = v_[(i + 1) % n] - a;
        const double len = norm(e);
        // depth of (x, y) against this edge: (c0 + c1 x) / len
        const double c1 = -e.y / len;
        const double c0 = (e.x * (y - a.y) + e.y * a.x) / len;
        if (c1 > 0.0) {
          lo = std::max(lo, (depth - c0) / c1);
        } else if (c1 < 0.0) {
          hi = std::min(hi, (depth - c0) / c1);
        } else if (c0 < depth) {
          empty = true;
        }
      }
      if (empty || !std::isfinite(lo) || !std::isfinite(hi) || lo > hi + 2.0) continue;
      for (double x = std::floor(lo); x <= std::ceil(hi); x += 1.0) {
        if (visit(x, y)) return true;
      }
    }
    return false;
  }

  Point unswept(double x, double y) const { return transposed_ ? Point{y, x} : Point{x, y}; }
  std::span<const Point> vertices() const { return v_; }

 private:
  std::vector<Point> v_;
  bool transposed_ = false;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

bool strictly_inside(std::span<const Point> v, Point q, double margin) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e = v[(i + 1) % n] - v[i];
    if (!(cross(e, q - v[i]) / norm(e) > margin)) return false;
  }
  return true;
}

bool any_interior_point(std::span<const Point> v, double margin) {
  const RowSweep sweep(v);
  return sweep.for_each_candidate(margin, [&](double x, double y) {
    return strictly_inside(sweep.vertices(), {x, y}, margin);
  });
}

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

std::vector<Point> lattice_points_in(const ConvexPolygon& polygon, Containment mode,
                                     double margin) {
  if (!(margin >= 0.0)) throw ParameterError("margin must be non-negative");
  const RowSweep sweep(polygon.vertices());
  std::vector<Point> out;
  const double depth = mode == Containment::kStrict ? margin : -margin;
  sweep.for_each_candidate(depth, [&](double x, double y) {
    // Adding zero turns -0 from the reflected sweep into +0.
    const Point q = sweep.unswept(x, y) + Point{0.0, 0.0};
    if (contains_point(polygon, q, mode, margin)) out.push_back(q);
    return false;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

LatticeStatus is_lattice_free(const ConvexPolygon& polygon, double margin) {
  LatticeStatus status;
  status.margin = margin;
  status.interior_points = lattice_points_in(polygon, Containment::kStrict, margin);
  for (const Point& p : lattice_points_in(polygon, Containment::kClosed, margin)) {
    if (!std::binary_search(status.interior_points.begin(), status.interior_points.end(), p,
                            lex_less)) {
      status.boundary_points.push_back(p);
    }
  }
  status.lattice_free = status.interior_points.empty();
  return status;
}

namespace {

std::vector<Point> scaled_vertices(const ConvexPolygon& polygon, double factor, Point center) {
  std::vector<Point> v(polygon.vertices().begin(), polygon.vertices().end());
  for (Point& p : v) p = center + factor * (p - center);
  return v;
}

}  // namespace

bool has_interior_lattice_point(const ConvexPolygon& polygon, double margin) {
  return any_interior_point(polygon.vertices(), margin);
}

std::optional<UnconditionalityCertificate> is_unconditional(const ConvexPolygon& polygon,
                                                            double tol) {
  const BoundingBox box = bounding_box(polygon);
  const Point z = 0.5 * (box.min + box.max);

  auto hausdorff = [&](auto reflect) {
    double worst = 0.0;
    for (const Point& p : polygon.vertices()) {
      const Point q = reflect(p);
      double nearest = INFINITY;
      for (const Point& s : polygon.vertices()) nearest = std::min(nearest, distance(q, s));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  UnconditionalityCertificate cert;
  cert.center = z;
  cert.horizontal_axis_residual = hausdorff([&](Point p) { return Point{p.x, 2.0 * z.y - p.y}; });
  cert.vertical_axis_residual = hausdorff([&](Point p) { return Point{2.0 * z.x - p.x, p.y}; });
  if (cert.horizontal_axis_residual <= tol && cert.vertical_axis_residual <= tol) return cert;
  return std::nullopt;
}

ScaledPolygon max_lattice_free_scale(const ConvexPolygon& polygon, Point center, double margin,
                                     double max_factor) {
  if (!(margin >= 0.0)) throw ParameterError("margin must be non-negative");
  if (!(max_factor > 1e-6)) throw ParameterError("max_factor must exceed 1e-6");
  if (!contains_point(polygon, center, Containment::kStrict, 0.0)) {
    throw ParameterError("scaling center must lie in the interior of the polygon");
  }
  auto blocked = [&](double factor) {
    return any_interior_point(scaled_vertices(polygon, factor, center), margin);
  };

  constexpr double kMinFactor = 1e-6;
  if (blocked(kMinFactor)) {
    throw InfeasibleError("scaling center lies within the margin of a lattice point");
  }
  if (max_factor <= 1.0 && !blocked(max_factor)) {
    return {max_factor, scaled(polygon, max_factor, center)};
  }
  double lo;
  double hi;
  if (blocked(1.0)) {
    hi = 1.0;
    lo = 0.5;
    while (lo > kMinFactor && blocked(lo)) {
      hi = lo;
      lo *= 0.5;
    }
    lo = std::max(lo, kMinFactor);
  } else {
    lo = 1.0;
    hi = std::min(2.0, max_factor);
    while (!blocked(hi)) {
      if (hi >= max_factor) return {max_factor, scaled(polygon, max_factor, center)};
      lo = hi;
      hi = std::min(2.0 * hi, max_factor);
    }
  }
  while (hi - lo > 1e-9 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (blocked(mid) ? hi : lo) = mid;
  }
  return {lo, scaled(polygon, lo, center)};
}

}  // namespace latfree
