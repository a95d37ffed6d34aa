#include "hs/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hs/errors.hpp"
#include "hs/raster_ops.hpp"

namespace hs {

ObjectiveResult objective(const Compact& K, const Boundary& boundary) {
  ObjectiveResult result;
  result.profile.reserve(boundary.size());
  for (const Compact& member : boundary.compacts()) {
    const double d = hausdorff_distance(K, member);
    result.profile.push_back(d);
    result.value += d;
  }
  return result;
}

std::optional<RasterCompact> maximal_compact(const Boundary& boundary,
                                             const DistanceVector& d,
                                             const GridSpec& grid) {
  if (d.size() != boundary.size()) {
    throw std::invalid_argument(
        "maximal_compact: distance vector size does not match boundary");
  }
  std::vector<RasterCompact> parts;
  parts.reserve(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    parts.push_back(closed_neighborhood(boundary[i], d[i], grid));
  }
  return intersect(parts);
}

bool profile_check(const Boundary& boundary, const DistanceVector& d,
                   const Compact& K, double tol) {
  if (d.size() != boundary.size()) return false;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (std::abs(hausdorff_distance(K, boundary[i]) - d[i]) > tol) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<Point2> rep_points(const Compact& c, const char* op) {
  if (const auto* f = c.as_finite()) return f->points();
  if (const auto* r = c.as_raster()) return r->occupied_centers();
  throw std::invalid_argument(std::string(op) +
                              ": rasterize polygon/segment compacts first");
}

}  // namespace

FiniteCompact minimal_prune(const FiniteCompact& K, const Boundary& boundary,
                            const DistanceVector& d, double tol) {
  if (!profile_check(boundary, d, Compact{K}, tol)) {
    throw std::invalid_argument(
        "minimal_prune: input does not realize the profile within tol");
  }
  const std::vector<Point2>& pts = K.points();  // canonical (x, y) order
  const std::size_t n = pts.size();
  const std::size_t m = boundary.size();

  std::vector<std::vector<Point2>> reps(m);
  for (std::size_t i = 0; i < m; ++i) {
    reps[i] = rep_points(boundary[i], "minimal_prune");
  }
  // Distances from each point of K to each member never change; cache them.
  std::vector<std::vector<double>> to_member(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      to_member[i][p] = point_to_set_distance(pts[p], boundary[i]);
    }
  }

  std::vector<char> alive(n, 1);
  std::size_t alive_count = n;

  auto removable = [&](std::size_t drop) {
    for (std::size_t i = 0; i < m; ++i) {
      double sup = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        if (alive[p] && p != drop) sup = std::max(sup, to_member[i][p]);
      }
      double a_side = 0.0;
      for (const Point2& r : reps[i]) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < n; ++p) {
          if (alive[p] && p != drop) {
            best = std::min(best, squared_dist(r, pts[p]));
          }
        }
        a_side = std::max(a_side, best);
      }
      const double dh = std::max(sup, std::sqrt(a_side));
      if (std::abs(dh - d[i]) > tol) return false;
    }
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n && alive_count > 1; ++p) {
      if (!alive[p]) continue;
      if (removable(p)) {
        alive[p] = 0;
        --alive_count;
        changed = true;
      }
    }
  }

  std::vector<Point2> kept;
  kept.reserve(alive_count);
  for (std::size_t p = 0; p < n; ++p) {
    if (alive[p]) kept.push_back(pts[p]);
  }
  return FiniteCompact(std::move(kept));
}

bool included_within(const Compact& sub, const Compact& sup, double tol) {
  const std::vector<Point2> pts = rep_points(sub, "included_within");
  for (const Point2& p : pts) {
    if (point_to_set_distance(p, sup) > tol) return false;
  }
  return true;
}

namespace {

double inclusion_gap(const Compact& sub, const Compact& sup) {
  double gap = 0.0;
  for (const Point2& p : rep_points(sub, "verify_structure")) {
    gap = std::max(gap, point_to_set_distance(p, sup));
  }
  return gap;
}

double profile_gap(const Boundary& boundary, const DistanceVector& d,
                   const Compact& K) {
  double gap = 0.0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    gap = std::max(gap, std::abs(hausdorff_distance(K, boundary[i]) - d[i]));
  }
  return gap;
}

StructureReport::Clause gap_clause(const std::string& name, double gap,
                                   double tol) {
  std::ostringstream detail;
  detail << "max deviation " << gap << " vs tol " << tol;
  return {name, gap <= tol, detail.str()};
}

}  // namespace

bool StructureReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const Clause& c) { return c.pass; });
}

std::string StructureReport::summary() const {
  std::ostringstream out;
  for (const Clause& c : clauses) {
    out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << " (" << c.detail
        << ")\n";
  }
  return out.str();
}

StructureReport verify_structure(const Compact& K, const Compact& K_min,
                                 const Compact& K_max,
                                 const Boundary& boundary,
                                 const DistanceVector& d, double tol) {
  StructureReport report;
  report.clauses.push_back(
      gap_clause("minimal included in K", inclusion_gap(K_min, K), tol));
  report.clauses.push_back(
      gap_clause("K included in maximal", inclusion_gap(K, K_max), tol));
  report.clauses.push_back(
      gap_clause("profile of minimal", profile_gap(boundary, d, K_min), tol));
  report.clauses.push_back(
      gap_clause("profile of K", profile_gap(boundary, d, K), tol));
  report.clauses.push_back(
      gap_clause("profile of maximal", profile_gap(boundary, d, K_max), tol));
  return report;
}

}  // namespace hs
