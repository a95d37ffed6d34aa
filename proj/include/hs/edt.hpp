#pragma once

#include "hs/compact.hpp"
#include "hs/grid.hpp"

namespace hs {

// Exact Euclidean distance transform: distance from every cell center to
// the nearest occupied cell center, via the separable two-pass
// lower-envelope algorithm (O(nx*ny) per pass, exact, not chamfer).
// Rows and columns are processed in OpenMP parallel; the serial variant is
// the reference kept for testing and benchmarking.
DistanceField distance_transform(const RasterCompact& sources);
DistanceField distance_transform_serial(const RasterCompact& sources);

// Distance from every cell center to the compact itself (not to a
// rasterization of it); exact per cell.
DistanceField sample_distance_field(const Compact& K, const GridSpec& grid);
DistanceField sample_distance_field_serial(const Compact& K,
                                           const GridSpec& grid);

}  // namespace hs
