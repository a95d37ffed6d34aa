#include "hs/raster_ops.hpp"

#include <cmath>
#include <sstream>

#include "hs/distance.hpp"
#include "hs/edt.hpp"
#include "hs/errors.hpp"

namespace hs {

namespace {

void require_coverage(const Box2& needed, const GridSpec& grid,
                      const char* op) {
  if (!grid.box().contains(needed)) {
    std::ostringstream msg;
    msg << op << ": grid [" << grid.box().lo.x << "," << grid.box().lo.y
        << "]x[" << grid.box().hi.x << "," << grid.box().hi.y
        << "] does not cover required box [" << needed.lo.x << ","
        << needed.lo.y << "]x[" << needed.hi.x << "," << needed.hi.y << "]";
    throw CoverageError(msg.str(), needed);
  }
}

RasterCompact threshold_field(const DistanceField& field, double limit) {
  std::vector<std::uint8_t> mask(field.grid.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(mask.size());
  bool any = false;
#pragma omp parallel for schedule(static) reduction(|| : any)
  for (std::int64_t i = 0; i < n; ++i) {
    if (field.values[i] <= limit) {
      mask[i] = 1;
      any = true;
    }
  }
  if (!any) {
    throw std::invalid_argument(
        "rasterize: no cell center meets the set at this resolution");
  }
  return RasterCompact(field.grid, std::move(mask));
}

}  // namespace

RasterCompact rasterize(const Compact& K, const GridSpec& grid) {
  if (const auto* r = K.as_raster()) {
    if (r->grid == grid) return *r;
  }
  require_coverage(K.bbox(), grid, "rasterize");
  const Polygon* poly = K.as_polygon();
  if (poly != nullptr && !poly->is_segment()) {
    std::vector<std::uint8_t> mask(grid.size(), 0);
    bool any = false;
#pragma omp parallel for schedule(static) reduction(|| : any)
    for (int iy = 0; iy < grid.ny; ++iy) {
      for (int ix = 0; ix < grid.nx; ++ix) {
        if (poly->contains(grid.center(ix, iy))) {
          mask[grid.index(ix, iy)] = 1;
          any = true;
        }
      }
    }
    if (!any) {
      throw std::invalid_argument(
          "rasterize: polygon interior misses every cell center; refine the "
          "grid");
    }
    return RasterCompact(grid, std::move(mask));
  }
  // Finite sets, segments, rasters from another grid: cells whose center is
  // within tol/2 of the set.
  return threshold_field(sample_distance_field(K, grid), grid.tol() / 2.0);
}

RasterCompact closed_neighborhood(const Compact& K, double r,
                                  const GridSpec& grid) {
  if (r < 0.0 || !std::isfinite(r)) {
    throw std::invalid_argument("closed_neighborhood: radius must be >= 0");
  }
  require_coverage(K.bbox().expanded(r), grid, "closed_neighborhood");
  const auto* raster = K.as_raster();
  if (raster != nullptr && raster->grid != grid) {
    throw GridMismatchError(
        "closed_neighborhood: raster source must live on the target grid");
  }
  const DistanceField field = raster != nullptr
                                  ? distance_transform(*raster)
                                  : sample_distance_field(K, grid);
  return threshold_field(field, r + grid.tol() / 2.0);
}

std::optional<RasterCompact> intersect(std::span<const RasterCompact> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("intersect: no operands");
  }
  const GridSpec& grid = parts.front().grid;
  for (const RasterCompact& p : parts) {
    if (p.grid != grid) {
      throw GridMismatchError("intersect: operands on different grids");
    }
  }
  std::vector<std::uint8_t> mask(parts.front().mask);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& other = parts[k].mask;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      mask[i] = mask[i] & other[i];
    }
  }
  bool any = false;
  for (std::uint8_t v : mask) any = any || (v != 0);
  if (!any) return std::nullopt;
  return RasterCompact(grid, std::move(mask));
}

}  // namespace hs
