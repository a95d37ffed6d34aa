#pragma once

#include <variant>
#include <vector>

#include "hs/geometry.hpp"
#include "hs/grid.hpp"

namespace hs {

// Nonempty finite point set, canonically ordered by (x, y) and
// deduplicated with exact equality.
class FiniteCompact {
 public:
  explicit FiniteCompact(std::vector<Point2> points);

  const std::vector<Point2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Box2 bbox() const { return bounding_box(points_); }

 private:
  std::vector<Point2> points_;
};

// A closed filled region bounded by a simple vertex loop, or, with exactly
// two vertices, a line segment (no interior). Degenerate loops are rejected.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool is_segment() const { return vertices_.size() == 2; }
  Box2 bbox() const { return bounding_box(vertices_); }

  // Filled-region membership (even-odd rule). Always false for segments.
  bool contains(Point2 p) const;

 private:
  std::vector<Point2> vertices_;
};

// Tagged union over the three computational presentations of a planar
// compact set.
struct Compact {
  std::variant<FiniteCompact, Polygon, RasterCompact> value;

  Compact(FiniteCompact c) : value(std::move(c)) {}
  Compact(Polygon c) : value(std::move(c)) {}
  Compact(RasterCompact c) : value(std::move(c)) {}

  const FiniteCompact* as_finite() const {
    return std::get_if<FiniteCompact>(&value);
  }
  const Polygon* as_polygon() const { return std::get_if<Polygon>(&value); }
  const RasterCompact* as_raster() const {
    return std::get_if<RasterCompact>(&value);
  }

  Box2 bbox() const;
};

// Point samples that stand in for the set in brute-force scans: the points
// themselves (finite), the occupied centers (raster), or the vertices plus
// edge samples at the given spacing (polygon/segment).
std::vector<Point2> sample_points(const Compact& c, double spacing);

}  // namespace hs
