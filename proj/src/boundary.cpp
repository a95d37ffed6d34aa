#include "hs/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hs/distance.hpp"
#include "hs/edt.hpp"
#include "hs/errors.hpp"
#include "hs/raster_ops.hpp"

namespace hs {

Boundary::Boundary(std::vector<Compact> compacts)
    : compacts_(std::move(compacts)) {
  if (compacts_.empty()) {
    throw std::invalid_argument("Boundary: needs at least one compact");
  }
  const GridSpec* grid = nullptr;
  for (const Compact& c : compacts_) {
    if (const auto* r = c.as_raster()) {
      if (grid != nullptr && *grid != r->grid) {
        throw GridMismatchError("Boundary: raster members on different grids");
      }
      grid = &r->grid;
    }
  }
}

Box2 Boundary::bbox() const {
  Box2 box = compacts_.front().bbox();
  for (std::size_t i = 1; i < compacts_.size(); ++i) {
    box = merge(box, compacts_[i].bbox());
  }
  return box;
}

namespace {

std::vector<Point2> hull_points(const Compact& c) {
  if (const auto* f = c.as_finite()) return convex_hull(f->points());
  if (const auto* p = c.as_polygon()) return convex_hull(p->vertices());
  return convex_hull(c.as_raster()->occupied_centers());
}

}  // namespace

double boundary_diameter(const Boundary& boundary) {
  std::vector<Point2> pts;
  for (const Compact& c : boundary.compacts()) {
    const auto h = hull_points(c);
    pts.insert(pts.end(), h.begin(), h.end());
  }
  const std::vector<Point2> hull = convex_hull(std::move(pts));
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      best = std::max(best, squared_dist(hull[i], hull[j]));
    }
  }
  return std::sqrt(best);
}

namespace {

double min_points_polygon(const std::vector<Point2>& pts, const Polygon& poly) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& p : pts) {
    Compact c{poly};
    best = std::min(best, point_to_set_distance(p, c));
    if (best == 0.0) break;
  }
  return best;
}

double min_points_points(const std::vector<Point2>& a,
                         const std::vector<Point2>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& p : a) {
    for (const Point2& q : b) {
      best = std::min(best, squared_dist(p, q));
    }
  }
  return std::sqrt(best);
}

}  // namespace

double min_set_distance(const Compact& A, const Compact& B) {
  const Polygon* pa = A.as_polygon();
  const Polygon* pb = B.as_polygon();
  if (pa && pb) {
    // Touching interiors collapse to zero distance via vertex membership.
    for (const Point2& v : pa->vertices()) {
      if (pb->contains(v)) return 0.0;
    }
    for (const Point2& v : pb->vertices()) {
      if (pa->contains(v)) return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    const auto& va = pa->vertices();
    const auto& vb = pb->vertices();
    const std::size_t na = pa->is_segment() ? 1 : va.size();
    const std::size_t nb = pb->is_segment() ? 1 : vb.size();
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        best = std::min(best, segment_segment_distance(
                                  va[i], va[(i + 1) % va.size()], vb[j],
                                  vb[(j + 1) % vb.size()]));
      }
    }
    return best;
  }
  if (pa) return min_set_distance(B, A);
  // A is finite or raster from here on.
  std::vector<Point2> pts;
  if (const auto* f = A.as_finite()) {
    pts = f->points();
  } else {
    pts = A.as_raster()->occupied_centers();
  }
  if (pb) return min_points_polygon(pts, *pb);

  const auto* ra = A.as_raster();
  const auto* rb = B.as_raster();
  if (ra && rb && ra->grid == rb->grid) {
    // Same grid: one distance transform instead of a quadratic point scan.
    const DistanceField db = distance_transform(*rb);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ra->mask.size(); ++i) {
      if (ra->mask[i]) best = std::min(best, db.values[i]);
    }
    return best;
  }
  std::vector<Point2> other;
  if (const auto* f = B.as_finite()) {
    other = f->points();
  } else {
    other = B.as_raster()->occupied_centers();
  }
  return min_points_points(pts, other);
}

Boundary normalized(const Boundary& boundary, const GridSpec& grid) {
  std::vector<Compact> members;
  members.reserve(boundary.size());
  for (const Compact& c : boundary.compacts()) {
    if (c.as_polygon() != nullptr) {
      members.push_back(Compact{rasterize(c, grid)});
    } else {
      members.push_back(c);
    }
  }
  return Boundary(std::move(members));
}

std::string to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::candidate: return "candidate";
    case SolutionKind::maximal: return "maximal";
    case SolutionKind::minimal: return "minimal";
  }
  return "unknown";
}

SteinerSolution::SteinerSolution(Compact K_, DistanceVector profile_,
                                 SolutionKind kind_, double tolerance_)
    : K(std::move(K_)),
      profile(std::move(profile_)),
      kind(kind_),
      tolerance(tolerance_) {
  value = 0.0;
  for (double d : profile) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("SteinerSolution: profile entries must be "
                                  "finite and nonnegative");
    }
    value += d;
  }
}

}  // namespace hs
