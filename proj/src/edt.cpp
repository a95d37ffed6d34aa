#include "hs/edt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hs/distance.hpp"

namespace hs {

namespace {

// 1-D squared distance transform of a sampled function f over integer
// positions 0..n-1 (lower envelope of parabolas). Values must be finite;
// unreachable positions use a large sentinel instead of infinity so the
// envelope arithmetic stays well defined. Output values are exact sums of
// integer squares whenever f is.
void squared_dt_1d(const double* f, double* out, int n, int* v, double* z) {
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::max();
  z[1] = std::numeric_limits<double>::max();
  for (int q = 1; q < n; ++q) {
    double s;
    while (true) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
      if (s <= z[k]) {
        --k;
      } else {
        break;
      }
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::max();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    out[q] = dq * dq + f[v[k]];
  }
}

DistanceField transform_impl(const RasterCompact& sources, bool parallel) {
  const GridSpec& g = sources.grid;
  const int nx = g.nx;
  const int ny = g.ny;
  // Larger than any attainable squared cell distance.
  const double sentinel = 4.0 * (double(nx) + ny) * (double(nx) + ny) + 4.0;

  // Row pass: squared distance to the nearest occupied cell in the same
  // row, by two index sweeps (stays exact, handles empty rows).
  std::vector<double> row_sq(g.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (int iy = 0; iy < ny; ++iy) {
    const std::uint8_t* m = &sources.mask[g.index(0, iy)];
    double* out = &row_sq[g.index(0, iy)];
    int last = -1;
    for (int ix = 0; ix < nx; ++ix) {
      if (m[ix]) last = ix;
      out[ix] = last >= 0 ? double(ix - last) * (ix - last) : sentinel;
    }
    last = -1;
    for (int ix = nx - 1; ix >= 0; --ix) {
      if (m[ix]) last = ix;
      if (last >= 0) {
        out[ix] = std::min(out[ix], double(last - ix) * (last - ix));
      }
    }
  }

  // Column pass: parabola envelope over the row results.
  std::vector<double> sq(g.size());
#pragma omp parallel if (parallel)
  {
    std::vector<double> f(ny), d(ny), z(ny + 1);
    std::vector<int> v(ny);
#pragma omp for schedule(static)
    for (int ix = 0; ix < nx; ++ix) {
      for (int iy = 0; iy < ny; ++iy) f[iy] = row_sq[g.index(ix, iy)];
      squared_dt_1d(f.data(), d.data(), ny, v.data(), z.data());
      for (int iy = 0; iy < ny; ++iy) sq[g.index(ix, iy)] = d[iy];
    }
  }

  DistanceField field{g, std::vector<double>(g.size())};
  const std::int64_t total = static_cast<std::int64_t>(g.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < total; ++i) {
    field.values[i] = g.cell * std::sqrt(sq[i]);
  }
  return field;
}

DistanceField sample_impl(const Compact& K, const GridSpec& grid,
                          bool parallel) {
  DistanceField field{grid, std::vector<double>(grid.size())};
#pragma omp parallel for schedule(static) if (parallel)
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      field.values[grid.index(ix, iy)] =
          point_to_set_distance(grid.center(ix, iy), K);
    }
  }
  return field;
}

}  // namespace

DistanceField distance_transform(const RasterCompact& sources) {
  return transform_impl(sources, true);
}

DistanceField distance_transform_serial(const RasterCompact& sources) {
  return transform_impl(sources, false);
}

DistanceField sample_distance_field(const Compact& K, const GridSpec& grid) {
  return sample_impl(K, grid, true);
}

DistanceField sample_distance_field_serial(const Compact& K,
                                           const GridSpec& grid) {
  return sample_impl(K, grid, false);
}

}  // namespace hs
