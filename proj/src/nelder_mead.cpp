#include "hs/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hs {

namespace {

struct Vertex {
  std::vector<double> x;
  double value = 0.0;
};

double simplex_diameter(const std::vector<Vertex>& simplex) {
  double diam = 0.0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    for (std::size_t j = i + 1; j < simplex.size(); ++j) {
      for (std::size_t k = 0; k < simplex[i].x.size(); ++k) {
        diam = std::max(diam, std::abs(simplex[i].x[k] - simplex[j].x[k]));
      }
    }
  }
  return diam;
}

}  // namespace

NelderMeadResult nelder_mead(const RepairingObjective& f,
                             std::vector<double> start,
                             const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0) {
    throw std::invalid_argument("nelder_mead: zero-dimensional start");
  }

  NelderMeadResult result;
  result.best_value = std::numeric_limits<double>::infinity();

  auto evaluate = [&](Vertex& v) {
    v.value = f(v.x);
    ++result.evaluations;
    if (v.value < result.best_value) {
      result.best_value = v.value;
      result.best_x = v.x;
    }
  };

  std::vector<Vertex> simplex(dim + 1);
  simplex[0].x = start;
  evaluate(simplex[0]);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1].x = start;
    simplex[i + 1].x[i] += options.init_step;
    evaluate(simplex[i + 1]);
  }

  auto by_value = [](const Vertex& a, const Vertex& b) {
    if (a.value != b.value) return a.value < b.value;
    return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(),
                                        b.x.end());
  };

  for (int iter = 0; iter < options.max_iters; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    result.iterations = iter + 1;

    if (simplex_diameter(simplex) < options.x_tol ||
        std::abs(simplex.back().value - simplex.front().value) <
            options.f_tol) {
      result.converged = true;
      break;
    }

    // Centroid of all but the worst vertex.
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        centroid[k] += simplex[i].x[k] / static_cast<double>(dim);
      }
    }
    Vertex& worst = simplex[dim];

    auto move_from_centroid = [&](double coeff) {
      Vertex v;
      v.x.resize(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        v.x[k] = centroid[k] + coeff * (worst.x[k] - centroid[k]);
      }
      evaluate(v);
      return v;
    };

    Vertex reflected = move_from_centroid(-options.reflection);
    if (reflected.value < simplex[0].value) {
      Vertex expanded = move_from_centroid(-options.expansion);
      worst = expanded.value < reflected.value ? std::move(expanded)
                                               : std::move(reflected);
      continue;
    }
    if (reflected.value < simplex[dim - 1].value) {
      worst = std::move(reflected);
      continue;
    }
    Vertex contracted = move_from_centroid(options.contraction);
    if (contracted.value < worst.value) {
      worst = std::move(contracted);
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        simplex[i].x[k] =
            simplex[0].x[k] +
            options.shrink * (simplex[i].x[k] - simplex[0].x[k]);
      }
      evaluate(simplex[i]);
    }
  }

  return result;
}

}  // namespace hs
