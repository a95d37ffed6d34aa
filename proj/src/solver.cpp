#include "hs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hs/edt.hpp"
#include "hs/errors.hpp"
#include "hs/nelder_mead.hpp"
#include "hs/raster_ops.hpp"

namespace hs {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in [0, 1); identical across platforms for a given state.
double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::vector<Point2> member_hull(const Compact& c) {
  if (const auto* f = c.as_finite()) return convex_hull(f->points());
  if (const auto* p = c.as_polygon()) return convex_hull(p->vertices());
  return convex_hull(c.as_raster()->occupied_centers());
}

double hull_diameter(const std::vector<Point2>& hull) {
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      best = std::max(best, squared_dist(hull[i], hull[j]));
    }
  }
  return std::sqrt(best);
}

double farthest_distance(Point2 p, const std::vector<Point2>& hull) {
  double best = 0.0;
  for (const Point2& q : hull) {
    best = std::max(best, squared_dist(p, q));
  }
  return std::sqrt(best);
}

bool lex_less_vec(const DistanceVector& a, const DistanceVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

struct EvalContext::Impl {
  GridSpec grid;
  Boundary members;  // normalized: no polygon variants remain

  struct MemberData {
    DistanceField field;            // exact distance to the member per cell
    std::vector<Point2> exact_pts;  // finite members: supremum side scans
    std::vector<std::size_t> rep_cells;  // raster members: cells for EDT lookup
    std::vector<Point2> hull;
    double diameter = 0.0;
  };
  std::vector<MemberData> data;
  std::vector<double> separations;  // packed i<j pairwise inf-distances
  double penalty_base = 0.0;
  double diameter = 0.0;
  bool needs_edt = false;

  Impl(const Boundary& boundary, const GridSpec& grid_)
      : grid(grid_), members(normalized(boundary, grid_)) {
    const std::size_t n = members.size();
    data.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Compact& m = members[i];
      MemberData md{sample_field(m), {}, {}, member_hull(m), 0.0};
      if (const auto* f = m.as_finite()) {
        md.exact_pts = f->points();
      } else {
        md.rep_cells = m.as_raster()->occupied_indices();
        needs_edt = true;
      }
      md.diameter = hull_diameter(md.hull);
      penalty_base += md.diameter;
      data.push_back(std::move(md));
    }
    separations.resize(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        separations[i * n + j] = min_set_distance(members[i], members[j]);
      }
    }
    diameter = hs::boundary_diameter(members);
  }

  DistanceField sample_field(const Compact& m) const {
    if (const auto* r = m.as_raster()) {
      if (r->grid == grid) return distance_transform(*r);
      // Off-grid raster: treat the occupied centers as a finite set.
      return sample_distance_field(Compact{FiniteCompact(r->occupied_centers())},
                                   grid);
    }
    return sample_distance_field(m, grid);
  }

  std::vector<std::size_t> occupied_for(const DistanceVector& d) const {
    const std::size_t cells = grid.size();
    const std::size_t n = data.size();
    const double half_tol = grid.tol() / 2.0;
    std::vector<std::uint8_t> flags(cells, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double limit = d[i] + half_tol;
      const double* values = data[i].field.values.data();
      const std::int64_t total = static_cast<std::int64_t>(cells);
#pragma omp parallel for schedule(static) if (total > 16384)
      for (std::int64_t c = 0; c < total; ++c) {
        if (values[c] > limit) flags[c] = 0;
      }
    }
    std::vector<std::size_t> occupied;
    for (std::size_t c = 0; c < cells; ++c) {
      if (flags[c]) occupied.push_back(c);
    }
    return occupied;
  }
};

EvalContext::EvalContext(const Boundary& boundary, const GridSpec& grid)
    : impl_(std::make_unique<Impl>(boundary, grid)) {}
EvalContext::~EvalContext() = default;
EvalContext::EvalContext(EvalContext&&) noexcept = default;

double EvalContext::penalty(const DistanceVector& d) const {
  const std::size_t n = impl_->data.size();
  double shortfall = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      shortfall +=
          std::max(0.0, impl_->separations[i * n + j] - d[i] - d[j]);
    }
  }
  return impl_->penalty_base + shortfall;
}

double EvalContext::boundary_diameter() const { return impl_->diameter; }
const GridSpec& EvalContext::grid() const { return impl_->grid; }
const Boundary& EvalContext::boundary() const { return impl_->members; }

std::optional<RasterCompact> EvalContext::region_mask(
    const DistanceVector& d) const {
  DistanceVector clamped = d;
  for (double& v : clamped) v = std::max(v, 0.0);
  const std::vector<std::size_t> occ = impl_->occupied_for(clamped);
  if (occ.empty()) return std::nullopt;
  std::vector<std::uint8_t> mask(impl_->grid.size(), 0);
  for (std::size_t c : occ) mask[c] = 1;
  return RasterCompact(impl_->grid, std::move(mask));
}

EvalContext::Outcome EvalContext::evaluate(DistanceVector& d) const {
  const Impl& im = *impl_;
  const std::size_t n = im.data.size();
  if (d.size() != n) {
    throw std::invalid_argument("EvalContext: distance vector size mismatch");
  }
  for (double& v : d) v = std::max(v, 0.0);

  const std::vector<std::size_t> occ = im.occupied_for(d);
  if (occ.empty()) {
    return {false, penalty(d)};
  }

  // Optional distance transform of the region, for raster-member suprema.
  std::vector<double> region_edt;
  if (im.needs_edt) {
    std::vector<std::uint8_t> mask(im.grid.size(), 0);
    for (std::size_t c : occ) mask[c] = 1;
    region_edt =
        distance_transform(RasterCompact(im.grid, std::move(mask))).values;
  }

  DistanceVector realized(n, 0.0);
  const std::int64_t occ_n = static_cast<std::int64_t>(occ.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& md = im.data[i];
    double sup = 0.0;  // sup over the region of the distance to the member
    const double* values = md.field.values.data();
#pragma omp parallel for schedule(static) reduction(max : sup) \
    if (occ_n > 16384)
    for (std::int64_t k = 0; k < occ_n; ++k) {
      sup = std::max(sup, values[occ[k]]);
    }

    double a_side = 0.0;  // sup over the member of the distance to the region
    if (!md.exact_pts.empty()) {
      for (const Point2& p : md.exact_pts) {
        double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best) \
    if (occ_n > 16384)
        for (std::int64_t k = 0; k < occ_n; ++k) {
          best = std::min(best, squared_dist(p, im.grid.center(occ[k])));
        }
        a_side = std::max(a_side, std::sqrt(best));
      }
    } else {
      for (std::size_t c : md.rep_cells) {
        a_side = std::max(a_side, region_edt[c]);
      }
    }
    realized[i] = std::max(sup, a_side);
  }

  double value = 0.0;
  for (double v : realized) value += v;
  d = std::move(realized);
  return {true, value};
}

SteinerSolution solve_single_point(const Boundary& boundary,
                                   const GridSpec& grid) {
  std::vector<std::vector<Point2>> hulls;
  hulls.reserve(boundary.size());
  for (const Compact& m : boundary.compacts()) {
    hulls.push_back(member_hull(m));
  }

  const int nx = grid.nx;
  const int ny = grid.ny;
  double best_value = std::numeric_limits<double>::infinity();
  std::int64_t best_index = 0;

#pragma omp parallel
  {
    double local_best = std::numeric_limits<double>::infinity();
    std::int64_t local_index = 0;
#pragma omp for schedule(static) nowait
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const Point2 c = grid.center(ix, iy);
        double sum = 0.0;
        for (const auto& hull : hulls) {
          sum += farthest_distance(c, hull);
        }
        const std::int64_t idx = static_cast<std::int64_t>(grid.index(ix, iy));
        if (sum < local_best || (sum == local_best && idx < local_index)) {
          local_best = sum;
          local_index = idx;
        }
      }
    }
#pragma omp critical
    {
      if (local_best < best_value ||
          (local_best == best_value && local_index < best_index)) {
        best_value = local_best;
        best_index = local_index;
      }
    }
  }

  const int bx = static_cast<int>(best_index % nx);
  const int by = static_cast<int>(best_index / nx);
  if (bx == 0 || bx == nx - 1 || by == 0 || by == ny - 1) {
    throw CoverageError(
        "solve_single_point: optimum on the grid border; enlarge the grid",
        boundary.bbox().expanded(boundary_diameter(boundary)));
  }

  const Point2 best_center = grid.center(bx, by);
  DistanceVector profile;
  profile.reserve(hulls.size());
  for (const auto& hull : hulls) {
    profile.push_back(farthest_distance(best_center, hull));
  }
  return SteinerSolution(Compact{FiniteCompact({best_center})},
                         std::move(profile), SolutionKind::candidate,
                         grid.tol());
}


SolveResult solve_dvector(const Boundary& boundary, const SolverConfig& cfg) {
  if (cfg.restarts < 1) {
    throw std::invalid_argument("solve_dvector: restarts must be >= 1");
  }
  EvalContext ctx(boundary, cfg.grid);
  const std::size_t n = ctx.boundary().size();
  const double diam = ctx.boundary_diameter();

  const SteinerSolution baseline = solve_single_point(ctx.boundary(), cfg.grid);

  // Deterministic start list: baseline profile, its per-axis scalings, then
  // seeded uniform draws over [0, diam]^n.
  std::vector<DistanceVector> starts;
  starts.push_back(baseline.profile);
  for (double scale : {0.75, 1.25}) {
    for (std::size_t i = 0; i < n && starts.size() < std::size_t(cfg.restarts);
         ++i) {
      DistanceVector d = baseline.profile;
      d[i] *= scale;
      starts.push_back(std::move(d));
    }
  }
  std::uint64_t rng_state = cfg.seed;
  while (starts.size() < std::size_t(cfg.restarts)) {
    DistanceVector d(n);
    for (double& v : d) v = diam * uniform01(rng_state);
    starts.push_back(std::move(d));
  }
  starts.resize(cfg.restarts);

  NelderMeadOptions nm;
  nm.max_iters = cfg.max_iters;
  nm.x_tol = cfg.simplex_tol;
  // F is a step function of d on a raster, so exact value ties are routine;
  // never stop on the value spread.
  nm.f_tol = 0.0;
  nm.init_step = std::max(0.08 * diam, 4.0 * cfg.grid.tol());

  struct RestartOutcome {
    std::vector<TraceEntry> trace;
    DistanceVector best_raw;      // simplex point that produced the best mask
    DistanceVector best_profile;  // realized profile of that mask
    double best_value = std::numeric_limits<double>::infinity();
    bool any_feasible = false;
  };
  std::vector<RestartOutcome> outcomes(cfg.restarts);

  // The simplex keeps the raw points: rewriting vertices with repaired
  // profiles would collapse it, since nearby points share a mask and
  // therefore a profile. The repaired vector is recorded in the trace and
  // kept alongside the raw point for the final solution.
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOutcome& out = outcomes[r];
    int eval_counter = 0;
    RepairingObjective f = [&](std::vector<double>& d) {
      DistanceVector repaired = d;
      const auto outcome = ctx.evaluate(repaired);
      out.trace.push_back({r, eval_counter++, repaired, outcome.feasible,
                           outcome.value});
      if (outcome.feasible &&
          (outcome.value < out.best_value ||
           (outcome.value == out.best_value &&
            lex_less_vec(repaired, out.best_profile)))) {
        out.best_value = outcome.value;
        out.best_raw = d;
        out.best_profile = std::move(repaired);
        out.any_feasible = true;
      }
      return outcome.value;
    };
    nelder_mead(f, starts[r], nm);
  }

  SolveResult result{
      SteinerSolution(baseline.K, baseline.profile, SolutionKind::candidate,
                      cfg.grid.tol()),
      {},
      {}};

  int best_restart = -1;
  for (int r = 0; r < cfg.restarts; ++r) {
    const RestartOutcome& out = outcomes[r];
    if (!out.any_feasible) {
      result.restart_bests.emplace_back(std::nullopt);
      continue;
    }
    const auto mask = ctx.region_mask(out.best_raw);
    if (!mask) {
      result.restart_bests.emplace_back(std::nullopt);
      continue;
    }
    result.restart_bests.emplace_back(
        SteinerSolution(Compact{*mask}, out.best_profile,
                        SolutionKind::maximal, cfg.grid.tol()));
    const SteinerSolution& candidate = *result.restart_bests.back();
    if (best_restart < 0 ||
        candidate.value < result.best.value ||
        (candidate.value == result.best.value &&
         lex_less_vec(candidate.profile, result.best.profile))) {
      result.best = candidate;
      best_restart = r;
    }
  }
  if (best_restart < 0) {
    throw NoSolutionError(
        "solve_dvector: no feasible distance vector found from any start");
  }

  for (int r = 0; r < cfg.restarts; ++r) {
    result.trace.entries.insert(result.trace.entries.end(),
                                outcomes[r].trace.begin(),
                                outcomes[r].trace.end());
  }
  double best_trace_value = std::numeric_limits<double>::infinity();
  for (const TraceEntry& e : result.trace.entries) {
    if (e.feasible && e.value < best_trace_value) {
      best_trace_value = e.value;
    }
  }
  for (std::size_t i = 0; i < result.trace.entries.size(); ++i) {
    if (result.trace.entries[i].feasible &&
        result.trace.entries[i].value == best_trace_value) {
      result.trace.best_index = i;
      break;
    }
  }
  return result;
}

FiniteCompact polish_finite(const FiniteCompact& K, const Boundary& boundary,
                            int steps, double initial_step) {
  if (steps <= 0) return K;
  const std::size_t n_pts = K.points().size();
  const std::size_t n_members = boundary.size();

  // Member representations for the exact finite objective.
  std::vector<std::vector<Point2>> reps(n_members);
  for (std::size_t i = 0; i < n_members; ++i) {
    const Compact& m = boundary[i];
    if (const auto* f = m.as_finite()) {
      reps[i] = f->points();
    } else if (const auto* r = m.as_raster()) {
      reps[i] = r->occupied_centers();
    } else {
      reps[i] = sample_points(m, initial_step > 0 ? initial_step : 1e-3);
    }
  }

  auto objective_of = [&](const std::vector<double>& flat) {
    double total = 0.0;
    for (std::size_t i = 0; i < n_members; ++i) {
      double sup = 0.0;
      for (std::size_t p = 0; p < n_pts; ++p) {
        const Point2 q{flat[2 * p], flat[2 * p + 1]};
        sup = std::max(sup, point_to_set_distance(q, boundary[i]));
      }
      double a_side = 0.0;
      for (const Point2& rp : reps[i]) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < n_pts; ++p) {
          best = std::min(best,
                          squared_dist(rp, {flat[2 * p], flat[2 * p + 1]}));
        }
        a_side = std::max(a_side, best);
      }
      total += std::max(sup, std::sqrt(a_side));
    }
    return total;
  };

  std::vector<double> best(2 * n_pts);
  for (std::size_t p = 0; p < n_pts; ++p) {
    best[2 * p] = K.points()[p].x;
    best[2 * p + 1] = K.points()[p].y;
  }
  const double initial_value = objective_of(best);
  double best_value = initial_value;

  // Restarted simplex: the objective is a sum of max-terms whose ties form
  // ridges that stagnate a single Nelder-Mead run; a fresh simplex at the
  // current best recovers, and the scale shrinks only when a round fails.
  RepairingObjective f = [&](std::vector<double>& x) { return objective_of(x); };
  double scale = initial_step > 0 ? initial_step : 1e-3;
  int budget = steps;
  while (budget > 0 && scale > 1e-10) {
    NelderMeadOptions nm;
    nm.max_iters = std::min(400, budget);
    nm.x_tol = 1e-12;
    nm.f_tol = 0.0;
    nm.init_step = scale;
    const NelderMeadResult run = nelder_mead(f, best, nm);
    budget -= std::max(run.iterations, 1);
    if (run.best_value < best_value - 1e-15) {
      best = run.best_x;
      best_value = run.best_value;
    } else {
      scale *= 0.25;
    }
  }

  if (!(best_value < initial_value)) return K;
  std::vector<Point2> pts(n_pts);
  for (std::size_t p = 0; p < n_pts; ++p) {
    pts[p] = {best[2 * p], best[2 * p + 1]};
  }
  return FiniteCompact(std::move(pts));
}

ClassEnumeration enumerate_classes(const Boundary& boundary,
                                   const SolverConfig& cfg, double value_tol) {
  return cluster_classes(boundary, cfg, solve_dvector(boundary, cfg),
                         value_tol);
}

ClassEnumeration cluster_classes(const Boundary& boundary,
                                 const SolverConfig& cfg,
                                 const SolveResult& run, double value_tol) {
  const EvalContext ctx(boundary, cfg.grid);
  const Boundary& members = ctx.boundary();
  const double tol = cfg.grid.tol();
  const double profile_tol = 2.0 * tol;

  // Basin-level filter on the raster values.
  std::vector<const SteinerSolution*> near;
  for (const auto& maybe : run.restart_bests) {
    if (maybe && maybe->value <= run.best.value + value_tol) {
      near.push_back(&*maybe);
    }
  }

  // Refine every candidate on the exact finite objective: the raster
  // objective is flat to within staircase noise along the profile
  // directions, so basin winners scatter by a few cells; prune+polish
  // removes that scatter entirely.
  struct Refined {
    DistanceVector profile;
    double value = 0.0;
  };
  std::vector<Refined> refined;
  refined.reserve(near.size());
  for (const SteinerSolution* s : near) {
    try {
      FiniteCompact pts(s->K.as_raster()->occupied_centers());
      pts = minimal_prune(pts, members, s->profile, 1.5 * tol);
      pts = polish_finite(pts, members, cfg.polish_steps, cfg.grid.cell);
      const ObjectiveResult exact = objective(Compact{pts}, members);
      refined.push_back({exact.profile, exact.value});
    } catch (const std::invalid_argument&) {
      refined.push_back({s->profile, s->value});
    }
  }
  double best_refined = std::numeric_limits<double>::infinity();
  for (const Refined& r : refined) best_refined = std::min(best_refined, r.value);

  auto same_cluster = [&](const DistanceVector& a, const DistanceVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > profile_tol) return false;
    }
    return true;
  };

  std::vector<const Refined*> representatives;
  for (const Refined& r : refined) {
    if (r.value > best_refined + value_tol) continue;  // stray local minima
    bool placed = false;
    for (const Refined*& rep : representatives) {
      if (same_cluster(r.profile, rep->profile)) {
        if (r.value < rep->value ||
            (r.value == rep->value && lex_less_vec(r.profile, rep->profile))) {
          rep = &r;
        }
        placed = true;
        break;
      }
    }
    if (!placed) representatives.push_back(&r);
  }

  std::sort(representatives.begin(), representatives.end(),
            [&](const Refined* a, const Refined* b) {
              if (a->value != b->value) return a->value < b->value;
              return lex_less_vec(a->profile, b->profile);
            });

  ClassEnumeration result;
  for (const Refined* rep : representatives) {
    const auto mask = ctx.region_mask(rep->profile);
    if (!mask) continue;
    result.classes.push_back(SteinerSolution(
        Compact{*mask}, rep->profile, SolutionKind::maximal, tol));
  }

  // Continuum signature: equal values but profiles that differ even as
  // sorted multisets.
  for (std::size_t i = 0; i < result.classes.size() && !result.continuum_suspect;
       ++i) {
    for (std::size_t j = i + 1; j < result.classes.size(); ++j) {
      if (std::abs(result.classes[i].value - result.classes[j].value) >
          value_tol) {
        continue;
      }
      DistanceVector a = result.classes[i].profile;
      DistanceVector b = result.classes[j].profile;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (!same_cluster(a, b)) {
        result.continuum_suspect = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace hs
