#pragma once

#include <optional>
#include <span>

#include "hs/compact.hpp"
#include "hs/grid.hpp"

namespace hs {

// Rasterize K onto the grid. Finite sets and segments mark every cell whose
// center lies within tol/2 of the set; filled polygons mark cells whose
// center is inside the region. Throws CoverageError if the grid does not
// contain K's bounding box.
RasterCompact rasterize(const Compact& K, const GridSpec& grid);

// Closed r-neighborhood of K as a raster: cells whose center is within
// r + tol/2 of K (outward-conservative rounding). The grid must cover K
// dilated by r. A raster K must already live on `grid`.
RasterCompact closed_neighborhood(const Compact& K, double r,
                                  const GridSpec& grid);

// Cellwise conjunction; nullopt is the explicit empty marker. All parts
// must share one grid.
std::optional<RasterCompact> intersect(std::span<const RasterCompact> parts);

}  // namespace hs
