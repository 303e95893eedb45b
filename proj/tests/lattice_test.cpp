#include "latfree/lattice.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "latfree/constructions.hpp"
#include "latfree/errors.hpp"
#include "latfree/functionals.hpp"
#include "test_support.hpp"

namespace latfree {
namespace {

ConvexPolygon box(double x0, double y0, double x1, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

TEST(LatticePointsTest, BigSquareStrict) {
  const std::vector<Point> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(lattice_points_in(box(-0.5, -0.5, 1.5, 1.5), Containment::kStrict), expected);
}

TEST(LatticePointsTest, UnitSquareHasOnlyBoundaryPoints) {
  const ConvexPolygon sq = box(0, 0, 1, 1);
  EXPECT_TRUE(lattice_points_in(sq, Containment::kStrict).empty());
  const std::vector<Point> corners{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(lattice_points_in(sq, Containment::kClosed), corners);
}

TEST(LatticePointsTest, ExtremizerTouchesFourPoints) {
  // Substitution into the three edge lines y = 0, y = sqrt3 x + 1, y = -sqrt3 (x - 1 - 1/sqrt3):
  // (0,0),(1,0) lie on the base, (0,1) on the left edge, (1,1) on the right edge.
  const ConvexPolygon t = equilateral_extremizer();
  const double s3 = std::sqrt(3.0);
  EXPECT_NEAR(-s3 * (1.0 - 1.0 - 1.0 / s3), 1.0, 1e-15);
  EXPECT_TRUE(lattice_points_in(t, Containment::kStrict).empty());
  const std::vector<Point> touching{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(lattice_points_in(t, Containment::kClosed), touching);
}

TEST(LatticeFreeTest, KnFamilyIsLatticeFree) {
  for (int n : {1, 5, 20}) {
    const LatticeStatus s = is_lattice_free(kn_family(n));
    EXPECT_TRUE(s.lattice_free);
    EXPECT_TRUE(s.interior_points.empty());
    EXPECT_EQ(s.boundary_points.size(), static_cast<std::size_t>(2 * (2 * n + 1)));
  }
}

TEST(LatticeFreeTest, BigSquareIsNot) {
  const LatticeStatus s = is_lattice_free(box(-0.5, -0.5, 1.5, 1.5));
  EXPECT_FALSE(s.lattice_free);
  EXPECT_EQ(s.interior_points.size(), 4u);
  EXPECT_TRUE(s.boundary_points.empty());
}

TEST(LatticeFreeTest, ExtremizerIsLatticeFree) {
  const LatticeStatus s = is_lattice_free(equilateral_extremizer());
  EXPECT_TRUE(s.lattice_free);
  EXPECT_EQ(s.boundary_points.size(), 4u);
}

TEST(LatticeFreeTest, StatusPointsAreIntegralAndInBox) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 12, 3.0);
    const LatticeStatus s = is_lattice_free(p);
    EXPECT_EQ(s.lattice_free, s.interior_points.empty());
    EXPECT_EQ(s.lattice_free, !has_interior_lattice_point(p));
    const BoundingBox b = bounding_box(p);
    for (const auto* list : {&s.interior_points, &s.boundary_points}) {
      for (const Point& q : *list) {
        EXPECT_EQ(q.x, std::round(q.x));
        EXPECT_EQ(q.y, std::round(q.y));
        EXPECT_TRUE(q.x >= b.min.x && q.x <= b.max.x && q.y >= b.min.y && q.y <= b.max.y);
      }
    }
  }
}

TEST(LatticeFreeTest, EnumerationMatchesDenseMembershipOracle) {
  Rng rng(13);
  int checked = 0;
  while (checked < 200) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 12, 3.0);
    // Only bodies whose boundary keeps away from the lattice are exactly decidable.
    bool clear = true;
    std::vector<Point> expected;
    const BoundingBox b = bounding_box(p);
    for (int x = static_cast<int>(std::floor(b.min.x)) - 1; x <= b.max.x + 1; ++x) {
      for (int y = static_cast<int>(std::floor(b.min.y)) - 1; y <= b.max.y + 1; ++y) {
        const double d = testing::depth(p, {double(x), double(y)});
        if (std::abs(d) < 2 * kLatticeMargin) clear = false;
        if (d > 0) expected.push_back({double(x), double(y)});
      }
    }
    if (!clear) continue;
    ++checked;
    EXPECT_EQ(is_lattice_free(p).interior_points, expected);
  }
}

TEST(UnconditionalTest, SquareAndK1) {
  const auto sq = is_unconditional(box(0, 0, 1, 1));
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->center, (Point{0.5, 0.5}));
  const auto k1 = is_unconditional(kn_family(1));
  ASSERT_TRUE(k1);
  EXPECT_EQ(k1->center, (Point{0.0, 0.5}));
  EXPECT_EQ(k1->horizontal_axis_residual, 0.0);
  EXPECT_EQ(k1->vertical_axis_residual, 0.0);
}

TEST(UnconditionalTest, TrianglesAndSkewShapesAreNot) {
  EXPECT_FALSE(is_unconditional(equilateral_extremizer()));
  EXPECT_FALSE(is_unconditional(ConvexPolygon({{0, 0}, {2, 0}, {3, 1}, {1, 1}})));
  // Centrally symmetric but rotated square: symmetric about its diagonals only.
  EXPECT_FALSE(is_unconditional(rotated(box(0, 0, 1, 1), 0.3)));
}

TEST(MaxScaleTest, StripHitsLatticeLines) {
  const ScaledPolygon s = max_lattice_free_scale(box(-0.25, 0.25, 0.25, 0.75), {0, 0.5});
  EXPECT_NEAR(s.factor, 2.0, 1e-8);
}

TEST(MaxScaleTest, ShrunkSquareRecoversUnitCell) {
  const ConvexPolygon small = scaled(box(0, 0, 1, 1), 0.9, {0.5, 0.5});
  const ScaledPolygon s = max_lattice_free_scale(small, {0.5, 0.5});
  EXPECT_NEAR(s.factor, 1.0 / 0.9, 1e-6);
}

TEST(MaxScaleTest, InsideOpenCellScalesAtLeastOne) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    ConvexPolygon p = testing::random_convex_polygon(rng, 10, 1.0);
    const Point c = incircle(p).center;
    const BoundingBox b = bounding_box(p);
    const double reach = std::max({c.x - b.min.x, b.max.x - c.x, c.y - b.min.y, b.max.y - c.y});
    p = translated(scaled(p, 0.45 / reach, c), Point{0.5, 0.5} - c);
    EXPECT_GE(max_lattice_free_scale(p, {0.5, 0.5}).factor, 1.0);
  }
}

TEST(MaxScaleTest, BisectionCertificate) {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    ConvexPolygon p = testing::random_convex_polygon(rng, 10, 1.0);
    const Point c = incircle(p).center;
    const Point target{rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)};
    p = translated(p, target - c);
    const ScaledPolygon s = max_lattice_free_scale(p, target);
    for (double f : {0.25, 0.5, 0.9, 1.0}) {
      EXPECT_TRUE(is_lattice_free(scaled(p, f * s.factor, target)).lattice_free);
    }
    EXPECT_FALSE(is_lattice_free(scaled(p, s.factor + 1e-6, target)).lattice_free)
        << "trial " << trial << " factor " << s.factor;
  }
}

TEST(MaxScaleTest, Errors) {
  const ConvexPolygon sq = box(-0.5, -0.5, 0.5, 0.5);
  EXPECT_THROW(max_lattice_free_scale(sq, {0, 0}), InfeasibleError);
  EXPECT_THROW(max_lattice_free_scale(sq, {3, 3}), ParameterError);
  EXPECT_THROW(max_lattice_free_scale(sq, {0.1, 0.1}, -1.0), ParameterError);
}

}  // namespace
}  // namespace latfree
