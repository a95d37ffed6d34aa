#include "hs/compact.hpp"

#include <algorithm>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

GridSpec::GridSpec(Point2 min_corner_, double cell_, int nx_, int ny_)
    : min_corner(min_corner_), cell(cell_), nx(nx_), ny(ny_) {
  if (!is_finite(min_corner) || !std::isfinite(cell) || cell <= 0.0) {
    throw std::invalid_argument("GridSpec: cell size must be positive");
  }
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("GridSpec: grid must hold at least one cell");
  }
}

int GridSpec::clamp_ix(double x) const {
  const int i = static_cast<int>(std::floor((x - min_corner.x) / cell));
  return std::clamp(i, 0, nx - 1);
}

int GridSpec::clamp_iy(double y) const {
  const int i = static_cast<int>(std::floor((y - min_corner.y) / cell));
  return std::clamp(i, 0, ny - 1);
}

GridSpec make_square_grid(const Box2& box, int n) {
  if (n < 1) throw std::invalid_argument("make_square_grid: n must be >= 1");
  const double extent = std::max(box.width(), box.height());
  if (!(extent > 0.0)) {
    throw std::invalid_argument("make_square_grid: box has no extent");
  }
  return GridSpec(box.lo, extent / n, n, n);
}

RasterCompact::RasterCompact(GridSpec grid_, std::vector<std::uint8_t> mask_)
    : grid(grid_), mask(std::move(mask_)) {
  if (mask.size() != grid.size()) {
    throw std::invalid_argument("RasterCompact: mask size does not match grid");
  }
  if (count() == 0) {
    throw std::invalid_argument("RasterCompact: empty mask");
  }
}

std::size_t RasterCompact::count() const {
  std::size_t n = 0;
  for (std::uint8_t v : mask) n += (v != 0);
  return n;
}

std::vector<Point2> RasterCompact::occupied_centers() const {
  std::vector<Point2> centers;
  centers.reserve(count());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) centers.push_back(grid.center(i));
  }
  return centers;
}

std::vector<std::size_t> RasterCompact::occupied_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) idx.push_back(i);
  }
  return idx;
}

Box2 RasterCompact::bbox() const { return bounding_box(occupied_centers()); }

FiniteCompact::FiniteCompact(std::vector<Point2> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("FiniteCompact: empty point set");
  }
  for (const Point2& p : points_) {
    if (!is_finite(p)) {
      throw std::invalid_argument("FiniteCompact: non-finite coordinate");
    }
  }
  std::sort(points_.begin(), points_.end(), lex_less);
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw std::invalid_argument("Polygon: needs at least two vertices");
  }
  for (const Point2& p : vertices_) {
    if (!is_finite(p)) {
      throw std::invalid_argument("Polygon: non-finite coordinate");
    }
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n] && !(n == 2 && i == 1)) {
      throw std::invalid_argument("Polygon: repeated consecutive vertex");
    }
  }
  if (n == 2) return;  // segment

  double doubled_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled_area += cross(vertices_[i], vertices_[(i + 1) % n]);
  }
  if (doubled_area == 0.0) {
    throw std::invalid_argument("Polygon: degenerate (zero area)");
  }
  // Simplicity: no two non-adjacent edges may meet.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a1 = vertices_[i];
    const Point2 a2 = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(a1, a2, vertices_[j], vertices_[(j + 1) % n])) {
        throw std::invalid_argument("Polygon: self-intersecting loop");
      }
    }
  }
}

bool Polygon::contains(Point2 p) const {
  if (is_segment()) return false;
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& vi = vertices_[i];
    const Point2& vj = vertices_[j];
    if ((vi.y > p.y) != (vj.y > p.y)) {
      const double x_int = vj.x + (p.y - vj.y) * (vi.x - vj.x) / (vi.y - vj.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

Box2 Compact::bbox() const {
  return std::visit([](const auto& c) { return c.bbox(); }, value);
}

std::vector<Point2> sample_points(const Compact& c, double spacing) {
  if (const auto* f = c.as_finite()) return f->points();
  if (const auto* r = c.as_raster()) return r->occupied_centers();
  const Polygon& poly = *c.as_polygon();
  if (spacing <= 0.0) {
    throw std::invalid_argument("sample_points: spacing must be positive");
  }
  std::vector<Point2> samples;
  const auto& v = poly.vertices();
  const std::size_t n = poly.is_segment() ? 1 : v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    const double len = dist(a, b);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int s = 0; s < steps; ++s) {
      samples.push_back(a + (static_cast<double>(s) / steps) * (b - a));
    }
  }
  if (poly.is_segment()) samples.push_back(v[1]);
  return samples;
}

}  // namespace hs
