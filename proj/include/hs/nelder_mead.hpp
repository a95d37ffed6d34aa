#pragma once

#include <functional>
#include <vector>

namespace hs {

// Objective for the downhill simplex. The evaluator may rewrite x in place
// (e.g. project or repair it); the rewritten point is what enters the
// simplex.
using RepairingObjective = std::function<double(std::vector<double>& x)>;

struct NelderMeadOptions {
  int max_iters = 400;
  double x_tol = 1e-9;    // stop when the simplex diameter falls below this
  double f_tol = 1e-13;   // ... or the value spread does
  double init_step = 0.25;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Standard Nelder-Mead over R^n from a single start; deterministic.
// best_x/best_value track the best point ever evaluated, which under a
// repairing objective may differ from the final simplex.
NelderMeadResult nelder_mead(const RepairingObjective& f,
                             std::vector<double> start,
                             const NelderMeadOptions& options);

}  // namespace hs
