#pragma once

#include <cstdint>
#include <vector>

#include "hs/geometry.hpp"

namespace hs {

// Uniform square-cell grid. Cell (ix, iy) has its center at
// min_corner + ((ix + 0.5) * cell, (iy + 0.5) * cell).
struct GridSpec {
  Point2 min_corner;
  double cell = 1.0;
  int nx = 1;
  int ny = 1;

  GridSpec() = default;
  GridSpec(Point2 min_corner_, double cell_, int nx_, int ny_);

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * nx + ix;
  }
  Point2 center(int ix, int iy) const {
    return {min_corner.x + (ix + 0.5) * cell, min_corner.y + (iy + 0.5) * cell};
  }
  Point2 center(std::size_t idx) const {
    return center(static_cast<int>(idx % nx), static_cast<int>(idx / nx));
  }
  Box2 box() const {
    return {min_corner, {min_corner.x + nx * cell, min_corner.y + ny * cell}};
  }
  // Worst-case distance from a point to the center of the cell containing
  // it is cell*sqrt(2)/2; all raster equalities carry this tolerance.
  double tol() const { return cell * 1.4142135623730951; }

  // Indices of the cell whose center is nearest to p, clamped to the grid.
  int clamp_ix(double x) const;
  int clamp_iy(double y) const;

  bool operator==(const GridSpec& o) const {
    return min_corner == o.min_corner && cell == o.cell && nx == o.nx &&
           ny == o.ny;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

// Build a grid of n x n square cells covering `box` (extent may be padded
// on one axis so cells stay square).
GridSpec make_square_grid(const Box2& box, int n);

// Nonnegative distance sampled at every cell center. Row-major: index iy*nx+ix.
struct DistanceField {
  GridSpec grid;
  std::vector<double> values;

  double at(int ix, int iy) const { return values[grid.index(ix, iy)]; }
};

// A finite set of occupied cell centers; the raster representation of a
// compact set. At least one cell is always set.
struct RasterCompact {
  GridSpec grid;
  std::vector<std::uint8_t> mask;  // 0/1 per cell, row-major

  RasterCompact(GridSpec grid_, std::vector<std::uint8_t> mask_);

  bool occupied(int ix, int iy) const { return mask[grid.index(ix, iy)] != 0; }
  std::size_t count() const;
  std::vector<Point2> occupied_centers() const;
  std::vector<std::size_t> occupied_indices() const;
  Box2 bbox() const;  // bounding box of the occupied centers
};

}  // namespace hs
