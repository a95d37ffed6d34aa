#pragma once

#include "hs/compact.hpp"

namespace hs {

// inf over K of the Euclidean distance from p. Exact for every variant:
// point scans for finite/raster, edge/interior tests for polygons.
double point_to_set_distance(Point2 p, const Compact& K);

// sup over K of the Euclidean distance from p (the farthest point of K).
// For polygons the supremum is attained at a vertex.
double max_point_distance(Point2 p, const Compact& K);

// Hausdorff distance max(sup_{a in A} d(a,B), sup_{b in B} d(b,A)).
//
// finite x finite is exact; finite x raster is exact against the occupied
// centers; raster x raster requires identical grids and runs on two
// distance transforms. Polygon operands must be rasterized first.
double hausdorff_distance(const Compact& A, const Compact& B);

double hausdorff_distance(const FiniteCompact& A, const FiniteCompact& B);

}  // namespace hs
