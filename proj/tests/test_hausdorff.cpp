#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hs/distance.hpp"
#include "hs/errors.hpp"
#include "hs/raster_ops.hpp"

#include "test_util.hpp"

using namespace hs;
using hs::test::brute_hausdorff;
using hs::test::random_finite;

TEST_CASE("hausdorff basics") {
  const Compact a{FiniteCompact({{0, 0}})};
  const Compact b{FiniteCompact({{3, 4}})};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(5.0).epsilon(1e-15));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const FiniteCompact k = random_finite(rng, 12);
    CHECK(hausdorff_distance(k, k) == 0.0);
  }
}

TEST_CASE("metric axioms on random finite compacts") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const FiniteCompact a = random_finite(rng, 7);
    const FiniteCompact b = random_finite(rng, 7);
    const FiniteCompact c = random_finite(rng, 7);
    const double ab = hausdorff_distance(a, b);
    const double ba = hausdorff_distance(b, a);
    const double ac = hausdorff_distance(a, c);
    const double bc = hausdorff_distance(b, c);

    CHECK(ab >= 0.0);
    CHECK(ab == ba);  // exact symmetry
    CHECK(ac <= ab + bc + 1e-12);

    // identity of indiscernibles: shuffled copies coincide, others don't
    std::vector<Point2> shuffled = a.points();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(hausdorff_distance(a, FiniteCompact(shuffled)) == 0.0);
    if (!(a.points() == b.points())) CHECK(ab > 0.0);
  }
}

TEST_CASE("point estimate and ball inclusion hold exactly on finite sets") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteCompact a = random_finite(rng, 9);
    const FiniteCompact b = random_finite(rng, 9);
    const double r = hausdorff_distance(a, b);
    for (const Point2& p : a.points()) {
      // some point of B within d_H, equivalently rho(p, B) <= r
      CHECK(point_to_set_distance(p, Compact{b}) <= r);
    }
    for (const Point2& q : b.points()) {
      CHECK(point_to_set_distance(q, Compact{a}) <= r);
    }
  }
}

TEST_CASE("agreement between finite and raster paths") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const FiniteCompact a = random_finite(rng, 6);
    const FiniteCompact b = random_finite(rng, 6);
    const GridSpec grid({-1.3, -1.3}, 2.6 / 192, 192, 192);
    const RasterCompact ra = rasterize(Compact{a}, grid);
    const RasterCompact rb = rasterize(Compact{b}, grid);
    const double exact = hausdorff_distance(a, b);
    const double raster = hausdorff_distance(Compact{ra}, Compact{rb});
    CHECK(std::abs(exact - raster) <= grid.tol());
    // mixed path stays within half the tolerance of either side
    const double mixed = hausdorff_distance(Compact{a}, Compact{rb});
    CHECK(std::abs(exact - mixed) <= grid.tol());
  }
}

TEST_CASE("raster operands must share a grid") {
  const GridSpec g1({0, 0}, 1.0, 2, 2);
  const GridSpec g2({0, 0}, 0.5, 4, 4);
  const RasterCompact r1(g1, {1, 0, 0, 0});
  std::vector<std::uint8_t> m2(16, 0);
  m2[0] = 1;
  const RasterCompact r2(g2, m2);
  CHECK_THROWS_AS(hausdorff_distance(Compact{r1}, Compact{r2}),
                  GridMismatchError);
}

TEST_CASE("polygon operands are rejected until rasterized") {
  const Compact seg{Polygon({{0, 0}, {1, 0}})};
  const Compact pt{FiniteCompact({{0, 0}})};
  CHECK_THROWS_AS(hausdorff_distance(seg, pt), std::invalid_argument);
}

namespace {

// Four nested segments with a parallel segment over the middle one; the
// middle distance drops strictly below the outer ones.
struct RectangleInstance {
  Compact A{Polygon({{-1.0, 0.0}, {1.0, 0.0}})};
  Compact B{Polygon({{-2.0, 0.0}, {2.0, 0.0}})};
  Compact C{Polygon({{-3.0, 0.0}, {3.0, 0.0}})};
  Compact D{Polygon({{-2.0, 1.0}, {2.0, 1.0}})};
};

// Aligned dyadic samples of a horizontal segment, endpoints included.
std::vector<Point2> sample_segment(double x0, double x1, double y) {
  const double step = 1.0 / 256.0;
  std::vector<Point2> pts;
  for (double x = x0; x < x1; x += step) pts.push_back({x, y});
  pts.push_back({x1, y});
  return pts;
}

}  // namespace

TEST_CASE("rectangle instance: dense-sample oracle") {
  const double sqrt2 = std::sqrt(2.0);
  const auto a = sample_segment(-1, 1, 0);
  const auto b = sample_segment(-2, 2, 0);
  const auto c = sample_segment(-3, 3, 0);
  const auto d = sample_segment(-2, 2, 1);
  CHECK(std::abs(brute_hausdorff(a, d) - sqrt2) <= 1e-9);
  CHECK(std::abs(brute_hausdorff(c, d) - sqrt2) <= 1e-9);
  CHECK(std::abs(brute_hausdorff(b, d) - 1.0) <= 1e-9);
}

TEST_CASE("rectangle instance: raster path within grid tolerance") {
  const RectangleInstance inst;
  const GridSpec grid({-3.2, -0.2}, 6.4 / 512, 512, 128);
  const Compact ra{rasterize(inst.A, grid)};
  const Compact rb{rasterize(inst.B, grid)};
  const Compact rc{rasterize(inst.C, grid)};
  const Compact rd{rasterize(inst.D, grid)};
  const double sqrt2 = std::sqrt(2.0);
  CHECK(std::abs(hausdorff_distance(ra, rd) - sqrt2) <= grid.tol());
  CHECK(std::abs(hausdorff_distance(rc, rd) - sqrt2) <= grid.tol());
  CHECK(std::abs(hausdorff_distance(rb, rd) - 1.0) <= grid.tol());
}

namespace {

Point2 transform(Point2 p, double angle, Point2 shift, bool apply) {
  if (!apply) return p;
  return rotate(p, angle) + shift;
}

}  // namespace

TEST_CASE("sandwich property on symmetric-padding instances") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> small(1, 200);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 200; ++trial) {
    // dyadic coordinates keep both outer distances bit-identical
    const double a = small(rng) / 64.0;
    const double pad = small(rng) / 64.0;
    const double h = small(rng) / 64.0;
    const double b = a + pad;
    const double c = b + pad;

    const bool isometry = trial % 2 == 1;
    const double angle = unit(rng) * 6.283185307179586;
    const Point2 shift{4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0};
    auto tp = [&](double x, double y) {
      return transform({x, y}, angle, shift, isometry);
    };

    std::vector<Point2> pa = {tp(-a, 0), tp(a, 0)};
    std::vector<Point2> pb = pa;
    pb.push_back(tp(-b, 0));
    pb.push_back(tp(b, 0));
    const int extras = small(rng) % 5;
    for (int e = 0; e < extras; ++e) {
      const double x = a + (b - a) * unit(rng);
      pb.push_back(tp(x, 0));
      pb.push_back(tp(-x, 0));
    }
    std::vector<Point2> pc = pb;
    pc.push_back(tp(-c, 0));
    pc.push_back(tp(c, 0));
    const std::vector<Point2> pd = {tp(-b, h), tp(b, h)};

    const FiniteCompact A(pa), B(pb), C(pc), D(pd);
    const double d_ad = hausdorff_distance(A, D);
    const double d_cd = hausdorff_distance(C, D);
    const double d_bd = hausdorff_distance(B, D);
    CHECK(std::abs(d_ad - d_cd) <= 1e-12);
    CHECK(d_bd <= std::max(d_ad, d_cd) + 1e-12);
  }
}

TEST_CASE("sandwich can be strict") {
  // d_H(A, D) is realized only by D's probe point (6,0); B adds a point
  // next to the probe, C restores the outer distance with a far point.
  const FiniteCompact A({{0, 0}});
  const FiniteCompact B({{0, 0}, {5, 0}});
  const FiniteCompact C({{0, 0}, {5, 0}, {12, 0}});
  const FiniteCompact D({{0, 1}, {0, -1}, {6, 0}});
  const double d = hausdorff_distance(A, D);
  CHECK(d == 6.0);
  CHECK(hausdorff_distance(C, D) == 6.0);
  CHECK(hausdorff_distance(B, D) == 1.0);
  CHECK(hausdorff_distance(B, D) < d);
}
