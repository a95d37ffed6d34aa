#pragma once

#include <array>

#include "hs/boundary.hpp"
#include "hs/solver.hpp"

namespace hs::triangle {

// Symmetric two-point boundary: a_1..a_3 on the unit circle at 2*pi/3
// spacing (a_1 at `orientation`, counterclockwise), b_i the rotation of a_i
// by +pi/3 about the origin, members A_i = {a_i, b_i}.
struct Instance {
  explicit Instance(double orientation = 1.5707963267948966,
                    bool mirrored = false);

  std::array<Point2, 3> a;
  std::array<Point2, 3> b;
  double orientation;
  bool mirrored;

  Boundary boundary() const;
};

// f(t) = 2*sqrt(1 + t^2 - t) + sqrt(1 + t^2 + t): the objective of the
// symmetric two-point family parameterized by the distance t of either
// point from the center.
double f(double t);
double f_prime(double t);

// 4t^4 + t^2 - 5t + 1; its root in [0, 1/2] is the optimal parameter.
double quartic_residual(double t);

struct ClosedFormResult {
  double t0 = 0.0;
  double omega0 = 0.0;      // sqrt(1 + t0^2 - t0)
  double d3 = 0.0;          // sqrt(1 + t0^2 + t0)
  double S = 0.0;           // 2*omega0 + d3
  Point2 k_a;               // on segment [o, b_1] at distance t0 from o
  Point2 k_b;               // on segment [o, a_2] at distance t0 from o
  std::array<DistanceVector, 3> classes;  // cyclic permutations of the profile
};

// t0 from the closed radical form, cross-checked against safeguarded
// Newton on f'; disagreement beyond 1e-12 is a hard logic error.
ClosedFormResult solve_t0();
ClosedFormResult closed_form(const Instance& instance);

struct CrossValidationReport {
  struct Clause {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Clause> clauses;
  double solver_S = 0.0;
  double closed_S = 0.0;

  bool pass() const;
  std::string summary() const;
};

// Runs the generic d-vector solver on the default instance and checks it
// against the closed form: value, pruned+polished two-point minimal
// compact, containment in the maximal compact, and the three classes.
CrossValidationReport cross_validate(const SolverConfig& cfg);

// Grid convention used by the bundled runs: square box [-1.6, 1.6]^2.
GridSpec default_grid(int n);

}  // namespace hs::triangle
