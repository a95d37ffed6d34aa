#pragma once

#include <string>
#include <vector>

#include "hs/compact.hpp"

namespace hs {

using DistanceVector = std::vector<double>;

// Ordered family A_1..A_n of boundary compacts. Raster members must share
// one grid.
class Boundary {
 public:
  explicit Boundary(std::vector<Compact> compacts);

  const std::vector<Compact>& compacts() const { return compacts_; }
  const Compact& operator[](std::size_t i) const { return compacts_[i]; }
  std::size_t size() const { return compacts_.size(); }

  Box2 bbox() const;

 private:
  std::vector<Compact> compacts_;
};

// Diameter of the union of the members (max pairwise point distance).
double boundary_diameter(const Boundary& boundary);

// inf-inf distance between two compacts (0 when they touch or overlap).
double min_set_distance(const Compact& A, const Compact& B);

// Replace polygon/segment members by their rasterization on `grid` so that
// distance computations have exact paths everywhere. Finite and raster
// members pass through unchanged.
Boundary normalized(const Boundary& boundary, const GridSpec& grid);

enum class SolutionKind { candidate, maximal, minimal };

std::string to_string(SolutionKind kind);

struct SteinerSolution {
  Compact K;
  DistanceVector profile;   // realized d(K, A_i)
  double value = 0.0;       // sum of the profile
  SolutionKind kind = SolutionKind::candidate;
  double tolerance = 0.0;   // grid tolerance the solve ran at

  SteinerSolution(Compact K_, DistanceVector profile_, SolutionKind kind_,
                  double tolerance_);
};

}  // namespace hs
