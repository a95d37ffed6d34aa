#include "doctest.h"

#include <cmath>
#include <random>

#include "hs/edt.hpp"

#include "test_util.hpp"

using namespace hs;
using hs::test::brute_distance_field;
using hs::test::random_mask;

TEST_CASE("single source: corner distance is the diagonal") {
  const GridSpec grid({0, 0}, 1.0, 5, 5);
  std::vector<std::uint8_t> mask(25, 0);
  mask[grid.index(2, 2)] = 1;
  const RasterCompact sources(grid, std::move(mask));
  const DistanceField field = distance_transform(sources);
  CHECK(field.at(0, 0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(field.at(2, 2) == 0.0);
  CHECK(field.at(4, 2) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("all cells occupied gives the zero field") {
  const GridSpec grid({0, 0}, 0.5, 7, 3);
  const RasterCompact sources(grid, std::vector<std::uint8_t>(21, 1));
  for (double v : distance_transform(sources).values) CHECK(v == 0.0);
}

TEST_CASE("zero exactly on source cells, positive elsewhere") {
  std::mt19937_64 rng(31);
  const RasterCompact sources = random_mask(rng, 24, 17, 0.1);
  const DistanceField field = distance_transform(sources);
  for (std::size_t i = 0; i < sources.mask.size(); ++i) {
    if (sources.mask[i]) {
      CHECK(field.values[i] == 0.0);
    } else {
      CHECK(field.values[i] > 0.0);
    }
  }
}

TEST_CASE("matches the quadratic brute-force oracle") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> dim(1, 64);
  const double occupancies[] = {0.02, 0.08, 0.3};
  for (int trial = 0; trial < 40; ++trial) {
    const int nx = dim(rng);
    const int ny = dim(rng);
    const RasterCompact sources =
        random_mask(rng, nx, ny, occupancies[trial % 3]);
    const DistanceField field = distance_transform(sources);
    const std::vector<double> oracle = brute_distance_field(sources);
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      CHECK(std::abs(field.values[i] - oracle[i]) < 1e-9);
    }
  }
}

TEST_CASE("parallel and serial transforms agree bitwise") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 10; ++trial) {
    const RasterCompact sources = random_mask(rng, 97, 61, 0.05);
    const DistanceField par = distance_transform(sources);
    const DistanceField ser = distance_transform_serial(sources);
    REQUIRE(par.values.size() == ser.values.size());
    for (std::size_t i = 0; i < par.values.size(); ++i) {
      CHECK(par.values[i] == ser.values[i]);
    }
  }
}

TEST_CASE("sampled fields agree bitwise between parallel and serial") {
  std::mt19937_64 rng(99);
  const FiniteCompact k = hs::test::random_finite(rng, 9);
  const GridSpec grid({-1.5, -1.5}, 3.0 / 64, 64, 64);
  const DistanceField par = sample_distance_field(Compact{k}, grid);
  const DistanceField ser = sample_distance_field_serial(Compact{k}, grid);
  for (std::size_t i = 0; i < par.values.size(); ++i) {
    CHECK(par.values[i] == ser.values[i]);
  }
}

TEST_CASE("sampled field of a finite set is exact at cell centers") {
  const FiniteCompact k({{0.25, 0.25}, {-0.75, 0.75}});
  const GridSpec grid({-1.0, -1.0}, 0.5, 4, 4);
  const DistanceField field = sample_distance_field(Compact{k}, grid);
  CHECK(field.at(2, 2) == 0.0);  // center (0.25, 0.25)
  CHECK(field.at(0, 3) == 0.0);  // center (-0.75, 0.75)
  CHECK(field.at(3, 2) ==
        doctest::Approx(dist({0.75, 0.25}, {0.25, 0.25})).epsilon(1e-15));
}
