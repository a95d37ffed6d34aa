#include "hs/triangle.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hs/steiner.hpp"

namespace hs::triangle {

namespace {

constexpr double kThird = 2.0943951023931953;  // 2*pi/3
constexpr double kSixth = 1.0471975511965976;  // pi/3

Point2 mirror_x(Point2 p) { return {-p.x, p.y}; }

double f_second(double t) {
  return 1.5 / std::pow(t * t - t + 1.0, 1.5) +
         0.75 / std::pow(t * t + t + 1.0, 1.5);
}

// Root of f' in [0, 1/2] by Newton steps clipped to a shrinking bracket.
double newton_t0() {
  double lo = 0.0;
  double hi = 0.5;
  double t = 0.25;
  for (int iter = 0; iter < 200; ++iter) {
    const double g = f_prime(t);
    if (g < 0.0) {
      lo = t;
    } else if (g > 0.0) {
      hi = t;
    } else {
      return t;
    }
    double next = t - g / f_second(t);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - t) < 5e-17) return next;
    t = next;
  }
  return t;
}

}  // namespace

Instance::Instance(double orientation_, bool mirrored_)
    : orientation(orientation_), mirrored(mirrored_) {
  for (int i = 0; i < 3; ++i) {
    const double angle = orientation + i * kThird;
    a[i] = {std::cos(angle), std::sin(angle)};
    b[i] = {std::cos(angle + kSixth), std::sin(angle + kSixth)};
    if (mirrored) {
      a[i] = mirror_x(a[i]);
      b[i] = mirror_x(b[i]);
    }
  }
}

Boundary Instance::boundary() const {
  std::vector<Compact> members;
  for (int i = 0; i < 3; ++i) {
    members.push_back(Compact{FiniteCompact({a[i], b[i]})});
  }
  return Boundary(std::move(members));
}

double f(double t) {
  return 2.0 * std::sqrt(1.0 + t * t - t) + std::sqrt(1.0 + t * t + t);
}

double f_prime(double t) {
  return (2.0 * t - 1.0) / std::sqrt(t * t - t + 1.0) +
         (2.0 * t + 1.0) / (2.0 * std::sqrt(t * t + t + 1.0));
}

double quartic_residual(double t) {
  return 4.0 * t * t * t * t + t * t - 5.0 * t + 1.0;
}

ClosedFormResult solve_t0() { return closed_form(Instance{}); }

ClosedFormResult closed_form(const Instance& instance) {
  ClosedFormResult r;
  const double sqrt5 = std::sqrt(5.0);
  r.t0 = sqrt5 / 4.0 - 0.5 * std::sqrt(sqrt5 - 1.75);
  const double newton = newton_t0();
  if (std::abs(newton - r.t0) > 1e-12) {
    throw std::logic_error(
        "triangle::closed_form: radical and Newton roots disagree");
  }
  r.omega0 = std::sqrt(1.0 + r.t0 * r.t0 - r.t0);
  r.d3 = std::sqrt(1.0 + r.t0 * r.t0 + r.t0);
  r.S = 2.0 * r.omega0 + r.d3;
  // b[0] and a[1] are unit vectors, so these land at distance t0 from o on
  // the segments [o, b_1] and [o, a_2].
  r.k_a = r.t0 * instance.b[0];
  r.k_b = r.t0 * instance.a[1];
  r.classes = {DistanceVector{r.omega0, r.omega0, r.d3},
               DistanceVector{r.d3, r.omega0, r.omega0},
               DistanceVector{r.omega0, r.d3, r.omega0}};
  return r;
}

bool CrossValidationReport::pass() const {
  for (const Clause& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

std::string CrossValidationReport::summary() const {
  std::ostringstream out;
  for (const Clause& c : clauses) {
    out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << " (" << c.detail
        << ")\n";
  }
  return out.str();
}

GridSpec default_grid(int n) {
  return GridSpec({-1.6, -1.6}, 3.2 / n, n, n);
}

CrossValidationReport cross_validate(const SolverConfig& cfg) {
  const Instance instance;
  const Boundary boundary = instance.boundary();
  const ClosedFormResult cf = closed_form(instance);
  const double tol = cfg.grid.tol();

  CrossValidationReport report;
  report.closed_S = cf.S;

  const SolveResult run = solve_dvector(boundary, cfg);
  report.solver_S = run.best.value;

  {
    const double gap = std::abs(run.best.value - cf.S);
    std::ostringstream detail;
    detail << "solver S " << run.best.value << ", closed form " << cf.S
           << ", |gap| " << gap;
    report.clauses.push_back({"objective matches closed form (0.01)",
                              gap <= 0.01, detail.str()});
  }

  const ClassEnumeration classes =
      cluster_classes(boundary, cfg, run, 2.0 * tol);

  auto matches_profile = [&](const DistanceVector& got,
                             const DistanceVector& want) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(got[i] - want[i]) > 2.0 * tol) return false;
    }
    return true;
  };

  // The closed-form points belong to the class with profile
  // (omega0, omega0, d3); the other two classes are its rotations.
  const SteinerSolution* base = nullptr;
  for (const SteinerSolution& cls : classes.classes) {
    if (matches_profile(cls.profile, cf.classes[0])) {
      base = &cls;
      break;
    }
  }

  {
    bool ok = false;
    std::ostringstream detail;
    if (base == nullptr) {
      detail << "no cluster matches the base profile";
    } else {
      const RasterCompact& maximal = *base->K.as_raster();
      FiniteCompact pruned =
          minimal_prune(FiniteCompact(maximal.occupied_centers()), boundary,
                        base->profile, 1.5 * tol);
      const FiniteCompact polished =
          polish_finite(pruned, boundary, cfg.polish_steps, cfg.grid.cell);
      double worst = std::numeric_limits<double>::infinity();
      if (polished.size() == 2) {
        const Point2 p0 = polished.points()[0];
        const Point2 p1 = polished.points()[1];
        const double direct = std::max(dist(p0, cf.k_a), dist(p1, cf.k_b));
        const double swapped = std::max(dist(p0, cf.k_b), dist(p1, cf.k_a));
        worst = std::min(direct, swapped);
        ok = worst <= 1e-3;
      }
      detail << polished.size() << " points, worst assignment distance "
             << worst;
    }
    report.clauses.push_back(
        {"pruned+polished minimal equals the two-point solution (1e-3)", ok,
         detail.str()});
  }

  {
    bool ok = false;
    std::ostringstream detail;
    if (base == nullptr) {
      detail << "no cluster matches the base profile";
    } else {
      const double ga = point_to_set_distance(cf.k_a, base->K);
      const double gb = point_to_set_distance(cf.k_b, base->K);
      ok = ga <= tol && gb <= tol;
      detail << "distances into maximal region: " << ga << ", " << gb;
    }
    report.clauses.push_back({"maximal compact contains both solution points",
                              ok, detail.str()});
  }

  {
    bool ok = classes.classes.size() == 3;
    std::vector<bool> matched(3, false);
    std::ostringstream detail;
    detail << classes.classes.size() << " clusters; profiles:";
    for (const SteinerSolution& cls : classes.classes) {
      detail << " (";
      for (int i = 0; i < 3; ++i) {
        detail << (i ? ", " : "") << cls.profile[i];
      }
      detail << ")";
      bool placed = false;
      for (int k = 0; k < 3 && !placed; ++k) {
        if (matched[k]) continue;
        if (matches_profile(cls.profile, cf.classes[k])) {
          matched[k] = true;
          placed = true;
        }
      }
      ok = ok && placed;
    }
    report.clauses.push_back(
        {"three classes with cyclically permuted profiles", ok, detail.str()});
  }

  return report;
}

}  // namespace hs::triangle
