#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hs/distance.hpp"
#include "hs/edt.hpp"
#include "hs/errors.hpp"
#include "hs/raster_ops.hpp"

#include "test_util.hpp"

using namespace hs;

TEST_CASE("closed neighborhood of a point approximates the disk") {
  const GridSpec grid({-1.2, -1.2}, 0.01, 240, 240);
  const RasterCompact disk =
      closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, 1.0, grid);
  const double area = double(disk.count()) * grid.cell * grid.cell;
  CHECK(std::abs(area - std::numbers::pi) / std::numbers::pi < 0.02);
}

TEST_CASE("radius zero reduces to rasterization") {
  const GridSpec grid({-1.0, -1.0}, 0.125, 16, 16);
  const Compact k{FiniteCompact({{0.0, 0.0}, {0.5, 0.5}})};
  const RasterCompact a = closed_neighborhood(k, 0.0, grid);
  const RasterCompact b = rasterize(k, grid);
  CHECK(a.mask == b.mask);
}

TEST_CASE("neighborhood of a convex polygon passes the convexity probe") {
  const GridSpec grid({-1.5, -1.5}, 3.0 / 256, 256, 256);
  const Compact k{Polygon({{-0.5, -0.4}, {0.6, -0.3}, {0.4, 0.5}, {-0.3, 0.4}})};
  const RasterCompact grown = closed_neighborhood(k, 0.5, grid);
  const std::vector<Point2> centers = grown.occupied_centers();
  const DistanceField field = distance_transform(grown);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Point2 mid = 0.5 * (centers[pick(rng)] + centers[pick(rng)]);
    const double gap =
        field.values[field.grid.index(field.grid.clamp_ix(mid.x),
                                      field.grid.clamp_iy(mid.y))];
    CHECK(gap <= grid.tol());
  }
}

TEST_CASE("neighborhood coverage error reports the required box") {
  const GridSpec grid({-1.0, -1.0}, 0.25, 8, 8);
  try {
    closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, 5.0, grid);
    FAIL("expected CoverageError");
  } catch (const CoverageError& e) {
    CHECK(e.required_box.contains(Point2{5.0, 0.0}));
    CHECK(e.required_box.contains(Point2{0.0, -5.0}));
  }
}

TEST_CASE("neighborhood rejects negative radius") {
  const GridSpec grid({-1.0, -1.0}, 0.25, 8, 8);
  CHECK_THROWS_AS(
      closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, -0.1, grid),
      std::invalid_argument);
}

TEST_CASE("tangent disks intersect in a sliver near the touch point") {
  const GridSpec grid({-1.3, -1.3}, 0.01, 460, 260);
  const RasterCompact b1 =
      closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, 1.0, grid);
  const RasterCompact b2 =
      closed_neighborhood(Compact{FiniteCompact({{2, 0}})}, 1.0, grid);
  const std::vector<RasterCompact> parts{b1, b2};
  const auto lens = intersect(parts);
  REQUIRE(lens.has_value());
  // every surviving center obeys both inflated-ball constraints, which pins
  // it inside a sliver of height ~sqrt(tol) around the touch point
  const double bound = std::sqrt(3.0 * grid.tol());
  for (const Point2& c : lens->occupied_centers()) {
    CHECK(dist(c, {1.0, 0.0}) <= bound);
  }
  // and a cell next to the touch point survives
  CHECK(point_to_set_distance({1.0, 0.0}, Compact{*lens}) <= grid.tol());
}

TEST_CASE("disjoint disks intersect to the explicit empty marker") {
  const GridSpec grid({-1.0, -1.0}, 0.01, 400, 200);
  const RasterCompact b1 =
      closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, 0.4, grid);
  const RasterCompact b2 =
      closed_neighborhood(Compact{FiniteCompact({{2, 0}})}, 0.4, grid);
  const std::vector<RasterCompact> parts{b1, b2};
  CHECK_FALSE(intersect(parts).has_value());
}

TEST_CASE("unit-distance disks intersect in the analytic lens area") {
  const GridSpec grid({-1.1, -1.1}, 0.005, 620, 440);
  const RasterCompact b1 =
      closed_neighborhood(Compact{FiniteCompact({{0, 0}})}, 1.0, grid);
  const RasterCompact b2 =
      closed_neighborhood(Compact{FiniteCompact({{1, 0}})}, 1.0, grid);
  const std::vector<RasterCompact> parts{b1, b2};
  const auto lens = intersect(parts);
  REQUIRE(lens.has_value());
  const double area = double(lens->count()) * grid.cell * grid.cell;
  const double analytic = 2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0;
  CHECK(std::abs(area - analytic) / analytic < 0.02);
}

TEST_CASE("intersect rejects mismatched grids") {
  const GridSpec g1({0, 0}, 1.0, 2, 2);
  const GridSpec g2({0, 0}, 1.0, 2, 3);
  const RasterCompact r1(g1, {1, 1, 1, 1});
  const RasterCompact r2(g2, {1, 1, 1, 1, 1, 1});
  const std::vector<RasterCompact> parts{r1, r2};
  CHECK_THROWS_AS(intersect(parts), GridMismatchError);
}
