#pragma once

#include <optional>
#include <string>

#include "hs/boundary.hpp"
#include "hs/distance.hpp"

namespace hs {

struct ObjectiveResult {
  double value = 0.0;
  DistanceVector profile;
};

// S(K) = sum_i d_H(K, A_i), together with the realized profile.
ObjectiveResult objective(const Compact& K, const Boundary& boundary);

// Intersection of the n closed d_i-neighborhoods of the boundary members.
// nullopt means the distance vector is infeasible at this resolution.
std::optional<RasterCompact> maximal_compact(const Boundary& boundary,
                                             const DistanceVector& d,
                                             const GridSpec& grid);

// true iff |d_H(K, A_i) - d_i| <= tol for every i.
bool profile_check(const Boundary& boundary, const DistanceVector& d,
                   const Compact& K, double tol);

// Greedy inclusion-minimal reduction: scan points in (x, y) order and drop
// any whose removal keeps the profile within tol, repeating until a full
// pass removes nothing. K itself must pass profile_check on entry.
FiniteCompact minimal_prune(const FiniteCompact& K, const Boundary& boundary,
                            const DistanceVector& d, double tol);

// Every point of `sub` lies within tol of `sup`. `sub` must be finite or
// raster.
bool included_within(const Compact& sub, const Compact& sup, double tol);

struct StructureReport {
  struct Clause {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Clause> clauses;

  bool pass() const;
  std::string summary() const;
};

// Checks K_min <= K <= K_max (inclusion up to tol) and that all three
// realize the profile d within tol. Failures are report entries, not errors.
StructureReport verify_structure(const Compact& K, const Compact& K_min,
                                 const Compact& K_max,
                                 const Boundary& boundary,
                                 const DistanceVector& d, double tol);

}  // namespace hs
