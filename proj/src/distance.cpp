#include "hs/distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hs/edt.hpp"
#include "hs/errors.hpp"

namespace hs {

namespace {

double min_dist_to_points(Point2 p, const std::vector<Point2>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& q : pts) {
    best = std::min(best, squared_dist(p, q));
  }
  return std::sqrt(best);
}

double min_dist_to_mask(Point2 p, const RasterCompact& r) {
  double best = std::numeric_limits<double>::infinity();
  const GridSpec& g = r.grid;
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (!r.mask[g.index(ix, iy)]) continue;
      best = std::min(best, squared_dist(p, g.center(ix, iy)));
    }
  }
  return std::sqrt(best);
}

double dist_to_polygon(Point2 p, const Polygon& poly) {
  if (poly.contains(p)) return 0.0;
  const auto& v = poly.vertices();
  const std::size_t n = poly.is_segment() ? 1 : v.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

// sup over A of distance to B, both finite point lists.
double directed_points(const std::vector<Point2>& a,
                       const std::vector<Point2>& b) {
  double sup = 0.0;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for reduction(max : sup) schedule(static) \
    if (n * static_cast<std::int64_t>(b.size()) > 65536)
  for (std::int64_t i = 0; i < n; ++i) {
    sup = std::max(sup, min_dist_to_points(a[i], b));
  }
  return sup;
}

}  // namespace

double point_to_set_distance(Point2 p, const Compact& K) {
  if (const auto* f = K.as_finite()) return min_dist_to_points(p, f->points());
  if (const auto* r = K.as_raster()) return min_dist_to_mask(p, *r);
  return dist_to_polygon(p, *K.as_polygon());
}

double max_point_distance(Point2 p, const Compact& K) {
  const std::vector<Point2>* pts = nullptr;
  std::vector<Point2> scratch;
  if (const auto* f = K.as_finite()) {
    pts = &f->points();
  } else if (const auto* r = K.as_raster()) {
    scratch = r->occupied_centers();
    pts = &scratch;
  } else {
    pts = &K.as_polygon()->vertices();  // farthest point of a filled region
  }
  double best = 0.0;
  for (const Point2& q : *pts) {
    best = std::max(best, squared_dist(p, q));
  }
  return std::sqrt(best);
}

double hausdorff_distance(const FiniteCompact& A, const FiniteCompact& B) {
  return std::max(directed_points(A.points(), B.points()),
                  directed_points(B.points(), A.points()));
}

double hausdorff_distance(const Compact& A, const Compact& B) {
  if (A.as_polygon() || B.as_polygon()) {
    throw std::invalid_argument(
        "hausdorff_distance: rasterize polygon/segment compacts first");
  }
  const auto* ra = A.as_raster();
  const auto* rb = B.as_raster();
  if (ra && rb) {
    if (ra->grid != rb->grid) {
      throw GridMismatchError(
          "hausdorff_distance: raster operands on different grids");
    }
    // Two distance transforms; each directed supremum is a masked max.
    const DistanceField da = distance_transform(*ra);
    const DistanceField db = distance_transform(*rb);
    double sup = 0.0;
    const std::int64_t n = static_cast<std::int64_t>(ra->mask.size());
#pragma omp parallel for reduction(max : sup) schedule(static) if (n > 65536)
    for (std::int64_t i = 0; i < n; ++i) {
      if (ra->mask[i]) sup = std::max(sup, db.values[i]);
      if (rb->mask[i]) sup = std::max(sup, da.values[i]);
    }
    return sup;
  }
  auto points_of = [](const Compact& c) {
    if (const auto* f = c.as_finite()) return f->points();
    return c.as_raster()->occupied_centers();
  };
  const std::vector<Point2> pa = points_of(A);
  const std::vector<Point2> pb = points_of(B);
  return std::max(directed_points(pa, pb), directed_points(pb, pa));
}

}  // namespace hs
