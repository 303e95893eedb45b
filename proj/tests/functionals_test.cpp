#include "latfree/functionals.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "latfree/constructions.hpp"
#include "latfree/lattice.hpp"
#include "test_support.hpp"

namespace latfree {
namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kEdge = 1.0 + 2.0 / kSqrt3;

ConvexPolygon unit_square() { return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

TEST(AreaPerimeterTest, KnownShapes) {
  EXPECT_DOUBLE_EQ(area(unit_square()), 1.0);
  EXPECT_DOUBLE_EQ(perimeter(unit_square()), 4.0);
  EXPECT_NEAR(area(equilateral_extremizer()), 2.01036297108184508789, 1e-12);
  EXPECT_NEAR(perimeter(equilateral_extremizer()), 6.46410161513775458705, 1e-12);
  EXPECT_DOUBLE_EQ(area(kn_family(1)), 2.0);
  EXPECT_DOUBLE_EQ(perimeter(kn_family(10)), 42.0);
}

TEST(DiameterTest, SquareWitnessIsLowestDiagonal) {
  const Diameter d = diameter(unit_square());
  EXPECT_DOUBLE_EQ(d.value, std::sqrt(2.0));
  EXPECT_EQ(d.first, 0u);
  EXPECT_EQ(d.second, 2u);
}

TEST(DiameterTest, KnFamily) {
  EXPECT_NEAR(diameter(kn_family(1)).value, std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(diameter(kn_family(10)).value, std::sqrt(401.0), 1e-13);
}

TEST(DiameterTest, MatchesAllPairsOracle) {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 50);
    const double expected = testing::all_pairs_diameter(p);
    const Diameter d = diameter(p);
    EXPECT_NEAR(d.value, expected, 1e-12 * expected);
    EXPECT_DOUBLE_EQ(distance(p[d.first], p[d.second]), d.value);
  }
}

TEST(WidthTest, KnownShapes) {
  for (int n : {1, 2, 7}) EXPECT_NEAR(width(kn_family(n)).value, 1.0, 1e-15);
  EXPECT_NEAR(width(equilateral_extremizer()).value, 1.86602540378443864676, 1e-12);
  const LrTriangleParams eq{1 / kSqrt3, 1 / kSqrt3};
  EXPECT_NEAR(width(triangle_lr(eq)).value, 1.0 + kSqrt3 / 2, 1e-12);
}

TEST(WidthTest, MatchesBruteForce) {
  Rng rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 50);
    const double expected = testing::brute_width(p);
    const Width w = width(p);
    EXPECT_NEAR(w.value, expected, 1e-12 * expected);
  }
}

TEST(CircumcircleTest, KnownShapes) {
  const Circle sq = circumcircle(unit_square());
  EXPECT_NEAR(sq.radius, std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(sq.center.x, 0.5, 1e-15);
  EXPECT_NEAR(sq.center.y, 0.5, 1e-15);

  const Circle k1 = circumcircle(kn_family(1));
  EXPECT_NEAR(k1.radius, std::sqrt(1.25), 1e-15);
  EXPECT_NEAR(k1.center.x, 0.0, 1e-15);
  EXPECT_NEAR(k1.center.y, 0.5, 1e-15);
}

TEST(CircumcircleTest, ObtuseTriangleUsesLongestEdge) {
  const ConvexPolygon t({{0, 0}, {4, 0}, {1, 1}});
  const Circle c = circumcircle(t);
  const testing::OracleCircle o = testing::brute_enclosing_circle(t);
  EXPECT_DOUBLE_EQ(c.radius, 2.0);
  EXPECT_DOUBLE_EQ(c.center.x, 2.0);
  EXPECT_DOUBLE_EQ(c.center.y, 0.0);
  EXPECT_DOUBLE_EQ(o.r, 2.0);
}

TEST(CircumcircleTest, MatchesPairTripleEnumeration) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 50);
    const testing::OracleCircle o = testing::brute_enclosing_circle(p);
    const Circle c = circumcircle(p);
    EXPECT_NEAR(c.radius, o.r, 1e-12 * o.r) << "trial " << trial;
    for (const Point& v : p.vertices()) EXPECT_LE(distance(v, c.center), c.radius * (1 + 1e-12));
  }
}

TEST(IncircleTest, KnownShapes) {
  const Circle sq = incircle(unit_square());
  EXPECT_NEAR(sq.radius, 0.5, 1e-15);
  EXPECT_NEAR(sq.center.x, 0.5, 1e-15);
  EXPECT_NEAR(sq.center.y, 0.5, 1e-15);
  EXPECT_NEAR(inradius(kn_family(1)), 0.5, 1e-15);
  EXPECT_NEAR(inradius(kn_family(3)), 0.5, 1e-15);
  EXPECT_NEAR(inradius(equilateral_extremizer()), 0.62200846792814621559, 1e-12);
}

TEST(IncircleTest, MatchesGridOracle) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 50);
    const Circle c = incircle(p);
    EXPECT_NEAR(c.radius, testing::grid_inradius(p), 1e-2);
    EXPECT_NEAR(testing::depth(p, c.center), c.radius, 1e-9);
  }
}

TEST(ReportTest, UnitSquare) {
  const FunctionalReport r = report(unit_square());
  EXPECT_DOUBLE_EQ(r.p(), 4.0);
  EXPECT_DOUBLE_EQ(r.A(), 1.0);
  EXPECT_DOUBLE_EQ(r.D(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(r.omega(), 1.0);
  EXPECT_NEAR(r.R(), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(r.r(), 0.5, 1e-15);
}

TEST(ReportTest, ExtremizerAndK1) {
  const FunctionalReport e = report(equilateral_extremizer());
  EXPECT_NEAR(e.p() - 2 * e.D(), kEdge, 1e-12);
  const FunctionalReport k = report(kn_family(1));
  EXPECT_NEAR(k.p() - 4 * k.R(), 1.52786404500042060718, 1e-12);
}

void expect_report_invariants(const FunctionalReport& f) {
  const double tol = 1e-9;
  EXPECT_LE(f.r(), f.R() + tol);
  EXPECT_LE(f.omega(), f.D() + tol);
  EXPECT_LE(f.D(), 2 * f.R() + tol);
  EXPECT_LE(2 * f.D(), f.p() + tol);
  EXPECT_LE(f.p(), std::numbers::pi * f.D() + tol);
  EXPECT_GE(f.p() * f.p(), 4 * std::numbers::pi * f.A() - tol);
  EXPECT_GT(f.A(), 0.0);
  EXPECT_GT(f.r(), 0.0);
}

TEST(ReportTest, InvariantsOnRandomPolygons) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    expect_report_invariants(report(testing::random_convex_polygon(rng, 40)));
  }
}

TEST(ReportTest, TranslationInvarianceAndHomogeneity) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexPolygon p = testing::random_convex_polygon(rng, 25);
    const Point shift{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    const double s = rng.uniform(0.1, 10);
    const FunctionalReport a = report(p);
    const FunctionalReport b = report(scaled(translated(p, shift), s, shift));
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
    EXPECT_LE(rel(b.p(), s * a.p()), 1e-9);
    EXPECT_LE(rel(b.D(), s * a.D()), 1e-9);
    EXPECT_LE(rel(b.R(), s * a.R()), 1e-9);
    EXPECT_LE(rel(b.r(), s * a.r()), 1e-9);
    EXPECT_LE(rel(b.omega(), s * a.omega()), 1e-9);
    EXPECT_LE(rel(b.A(), s * s * a.A()), 1e-9);
  }
}

TEST(ReportTest, UnconditionalBodiesHaveDiameterTwiceCircumradius) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> arc;
    for (int i = 0; i < 1 + static_cast<int>(rng.index(6)); ++i) {
      arc.push_back({rng.uniform(0, 2), rng.uniform(0, 2)});
    }
    arc.push_back({rng.uniform(0.1, 2), 0.0});
    arc.push_back({0.0, rng.uniform(0.1, 2)});
    const ConvexPolygon p = unconditionalize(arc, {rng.uniform(-3, 3), rng.uniform(-3, 3)});
    ASSERT_TRUE(is_unconditional(p));
    const FunctionalReport f = report(p);
    EXPECT_LE(std::abs(f.D() - 2 * f.R()), 1e-9 * std::max(1.0, f.D()));
  }
}

}  // namespace
}  // namespace latfree
