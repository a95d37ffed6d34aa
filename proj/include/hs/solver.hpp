#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "hs/boundary.hpp"
#include "hs/steiner.hpp"

namespace hs {

struct SolverConfig {
  GridSpec grid;
  int restarts = 30;
  int max_iters = 400;        // simplex iterations per restart
  double simplex_tol = 1e-8;  // simplex-diameter stopping threshold
  std::uint64_t seed = 1;
  int polish_steps = 4000;    // iteration budget for polish_finite
};

struct TraceEntry {
  int restart = 0;
  int eval = 0;  // evaluation counter within the restart
  DistanceVector d;
  bool feasible = false;
  double value = 0.0;
};

struct SolveTrace {
  std::vector<TraceEntry> entries;
  std::size_t best_index = 0;  // first entry attaining the final best value
};

struct SolveResult {
  SteinerSolution best;
  SolveTrace trace;
  // Best feasible outcome of each restart (profile already repaired);
  // entries without any feasible evaluation are absent.
  std::vector<std::optional<SteinerSolution>> restart_bests;
};

// Shared per-boundary state for distance-vector evaluations: one exact
// distance field per member plus the point representations used for the
// supremum scans. Reused across restarts and grids of one solve.
class EvalContext {
 public:
  EvalContext(const Boundary& boundary, const GridSpec& grid);
  ~EvalContext();
  EvalContext(EvalContext&&) noexcept;

  struct Outcome {
    bool feasible = false;
    double value = 0.0;
  };

  // F(d): build the feasible-region mask for d (clamped to >= 0), score the
  // realized profile, and repair d to it. Infeasible d keeps its value and
  // receives the penalty.
  Outcome evaluate(DistanceVector& d) const;

  std::optional<RasterCompact> region_mask(const DistanceVector& d) const;
  double penalty(const DistanceVector& d) const;
  double boundary_diameter() const;
  const GridSpec& grid() const;
  const Boundary& boundary() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Best singleton {x} over the cell centers, minimizing the sum of
// farthest-point distances to the members. Errors if the optimum lands on
// the grid border (the true optimum may then lie outside).
SteinerSolution solve_single_point(const Boundary& boundary,
                                   const GridSpec& grid);

// Derivative-free search over distance vectors: multi-start Nelder-Mead on
// F(d) = S(K_d) with repair-to-realized-profile after every feasible
// evaluation and a feasibility-gap penalty elsewhere. Starts are the
// single-point baseline profile, its per-axis perturbations, and seeded
// uniform draws. Deterministic for a fixed config.
SolveResult solve_dvector(const Boundary& boundary, const SolverConfig& cfg);

// Continuous refinement of a finite compact: downhill simplex over the
// concatenated point coordinates with the exact finite objective, started
// at one grid cell of scale. Returns K unchanged unless the objective
// strictly decreases.
FiniteCompact polish_finite(const FiniteCompact& K, const Boundary& boundary,
                            int steps, double initial_step);

struct ClassEnumeration {
  std::vector<SteinerSolution> classes;  // one representative per cluster
  // Set when near-optimal clusters share their value but differ even as
  // multisets, the signature of a continuum of profiles.
  bool continuum_suspect = false;
};

// Cluster the restart bests whose value is within value_tol of the best.
// Each near-best restart is first refined by pruning its region to a finite
// minimal compact and polishing it on the exact objective; the refined
// profiles land on the class profiles to far below grid resolution, so
// clustering at 2*grid tol separates classes cleanly. One representative
// maximal compact is returned per cluster.
ClassEnumeration enumerate_classes(const Boundary& boundary,
                                   const SolverConfig& cfg, double value_tol);

// Same clustering over an already-computed solve.
ClassEnumeration cluster_classes(const Boundary& boundary,
                                 const SolverConfig& cfg,
                                 const SolveResult& result, double value_tol);

}  // namespace hs
