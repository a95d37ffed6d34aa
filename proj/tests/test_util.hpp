#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hs/boundary.hpp"
#include "hs/compact.hpp"
#include "hs/grid.hpp"

namespace hs::test {

// Independent brute-force Hausdorff oracle over point lists; kept separate
// from the library paths it checks.
inline double brute_hausdorff(const std::vector<Point2>& a,
                              const std::vector<Point2>& b) {
  double h = 0.0;
  for (const Point2& p : a) {
    double m = std::numeric_limits<double>::infinity();
    for (const Point2& q : b) {
      m = std::min(m, std::hypot(p.x - q.x, p.y - q.y));
    }
    h = std::max(h, m);
  }
  for (const Point2& q : b) {
    double m = std::numeric_limits<double>::infinity();
    for (const Point2& p : a) {
      m = std::min(m, std::hypot(p.x - q.x, p.y - q.y));
    }
    h = std::max(h, m);
  }
  return h;
}

// Brute-force exact distance field oracle: per cell, scan all source cells.
inline std::vector<double> brute_distance_field(const RasterCompact& sources) {
  const GridSpec& g = sources.grid;
  std::vector<double> out(g.size(),
                          std::numeric_limits<double>::infinity());
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      double best = std::numeric_limits<double>::infinity();
      for (int sy = 0; sy < g.ny; ++sy) {
        for (int sx = 0; sx < g.nx; ++sx) {
          if (!sources.mask[g.index(sx, sy)]) continue;
          const double dx = static_cast<double>(ix - sx);
          const double dy = static_cast<double>(iy - sy);
          best = std::min(best, g.cell * std::hypot(dx, dy));
        }
      }
      out[g.index(ix, iy)] = best;
    }
  }
  return out;
}

inline std::vector<Point2> random_points(std::mt19937_64& rng, int count,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> coord(lo, hi);
  std::vector<Point2> pts(count);
  for (Point2& p : pts) p = {coord(rng), coord(rng)};
  return pts;
}

inline FiniteCompact random_finite(std::mt19937_64& rng, int max_points = 8,
                                   double lo = -1.0, double hi = 1.0) {
  std::uniform_int_distribution<int> size(1, max_points);
  return FiniteCompact(random_points(rng, size(rng), lo, hi));
}

inline RasterCompact random_mask(std::mt19937_64& rng, int nx, int ny,
                                 double occupancy) {
  std::bernoulli_distribution occ(occupancy);
  while (true) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
    bool any = false;
    for (auto& v : mask) {
      v = occ(rng) ? 1 : 0;
      any = any || v;
    }
    if (any) return RasterCompact(GridSpec({0.0, 0.0}, 1.0, nx, ny), std::move(mask));
  }
}

inline GridSpec grid_over(const Box2& box, int n) {
  return make_square_grid(box, n);
}

}  // namespace hs::test
