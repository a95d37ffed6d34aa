#include "doctest.h"

#include <cmath>

#include "hs/compact.hpp"
#include "hs/distance.hpp"
#include "hs/errors.hpp"
#include "hs/raster_ops.hpp"

#include "test_util.hpp"

using namespace hs;

TEST_CASE("finite compacts deduplicate and canonicalize") {
  const FiniteCompact k({{1.0, 2.0}, {0.0, 0.0}, {1.0, 2.0}, {0.0, -1.0}});
  REQUIRE(k.size() == 3);
  CHECK(k.points()[0] == Point2{0.0, -1.0});
  CHECK(k.points()[1] == Point2{0.0, 0.0});
  CHECK(k.points()[2] == Point2{1.0, 2.0});

  CHECK_THROWS_AS(FiniteCompact({}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(FiniteCompact({{nan, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(
      FiniteCompact({{std::numeric_limits<double>::infinity(), 0.0}}),
      std::invalid_argument);
}

TEST_CASE("polygon validation") {
  CHECK_NOTHROW(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_NOTHROW(Polygon({{0, 0}, {2, 1}}));  // segment
  // bowtie self-intersection
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}),
                  std::invalid_argument);
  // collinear loop has zero area
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Polygon({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}),
                  std::invalid_argument);

  const Polygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(square.contains({0.5, 0.5}));
  CHECK_FALSE(square.contains({1.5, 0.5}));
  const Polygon segment({{0, 0}, {2, 0}});
  CHECK_FALSE(segment.contains({1.0, 0.0}));  // segments have no interior
}

TEST_CASE("point to set distance") {
  CHECK(point_to_set_distance({0, 0}, Compact{FiniteCompact({{3, 4}})}) ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK(point_to_set_distance({1, 0},
                              Compact{FiniteCompact({{1, 0}, {5, 5}})}) == 0.0);

  // segment handled analytically
  const Compact seg{Polygon({{-1, 0}, {1, 0}})};
  CHECK(point_to_set_distance({0, 2}, seg) == doctest::Approx(2.0));
  CHECK(point_to_set_distance({3, 0}, seg) == doctest::Approx(2.0));

  const Compact square{Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  CHECK(point_to_set_distance({0.5, 0.5}, square) == 0.0);
  CHECK(point_to_set_distance({2.0, 0.5}, square) == doctest::Approx(1.0));

  // rasterized segment: within grid tolerance of the analytic value
  const GridSpec grid({-1.5, -0.5}, 0.01, 300, 100);
  const RasterCompact raster = rasterize(seg, grid);
  const double d = point_to_set_distance({0, 2}, Compact{raster});
  CHECK(std::abs(d - 2.0) <= grid.tol());
}

TEST_CASE("max point distance picks the farthest point") {
  CHECK(max_point_distance({0, 0}, Compact{FiniteCompact({{1, 0}, {3, 4}})}) ==
        doctest::Approx(5.0));
  const Compact square{Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  CHECK(max_point_distance({0, 0}, square) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rasterize marks nearest cells for finite sets") {
  const GridSpec grid({-1.0, -1.0}, 0.25, 8, 8);
  const RasterCompact r = rasterize(Compact{FiniteCompact({{0.0, 0.0}})}, grid);
  CHECK(r.count() >= 1);
  for (const Point2& c : r.occupied_centers()) {
    CHECK(dist(c, {0.0, 0.0}) <= grid.tol() / 2.0);
  }
}

TEST_CASE("rasterize unit square counts cells by area") {
  const GridSpec grid({-0.05, -0.05}, 0.1, 12, 12);
  const Compact square{Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  const RasterCompact r = rasterize(square, grid);
  CHECK(r.count() == 100);  // area / cell^2 with aligned cells
}

TEST_CASE("rasterize coverage error carries the required box") {
  const GridSpec grid({0.0, 0.0}, 0.5, 4, 4);
  try {
    rasterize(Compact{FiniteCompact({{10.0, 10.0}})}, grid);
    FAIL("expected CoverageError");
  } catch (const CoverageError& e) {
    CHECK(e.required_box.contains(Point2{10.0, 10.0}));
  }
}

TEST_CASE("raster compact invariants") {
  const GridSpec grid({0, 0}, 1.0, 2, 2);
  CHECK_THROWS_AS(RasterCompact(grid, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RasterCompact(grid, {1, 0}), std::invalid_argument);
  const RasterCompact r(grid, {1, 0, 0, 1});
  CHECK(r.count() == 2);
  CHECK(r.occupied_centers()[0] == Point2{0.5, 0.5});
}

TEST_CASE("grid spec invariants and derived tolerance") {
  CHECK_THROWS_AS(GridSpec({0, 0}, 0.0, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec({0, 0}, 1.0, 0, 4), std::invalid_argument);
  const GridSpec g({0, 0}, 0.5, 10, 10);
  CHECK(g.tol() == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(g.center(0, 0) == Point2{0.25, 0.25});
  CHECK(g.size() == 100);
}
