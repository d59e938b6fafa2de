#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace rplan {

// Discretization scale for the rescaled Poisson density: c is the Poisson
// parameter (the ratio n/d treated as a single real), the grid step is
// 1/sqrt(c).
struct DiscretizationParams {
  double c;
  double step() const { return 1.0 / std::sqrt(c); }
};

// Grid cell index: the integer k with y in [(k-c)/sqrt(c), (k+1-c)/sqrt(c)).
long long grid_index(double y, DiscretizationParams params);

// Rescaled Poisson step density: constant on each grid cell with value
// sqrt(c) * c^k e^{-c} / k! at cell k, and 0 for negative k. Evaluated in
// log space.
double poisson_step_density(double y, DiscretizationParams params);

// Companion step function with value (k + 1 - c)/sqrt(c) on cell k; its
// forward difference is identically 1.
double grid_coordinate_shift(double y, DiscretizationParams params);

// alpha-fold forward difference with the grid step, in-place triangular
// accumulation.
double iterated_difference(const std::function<double(double)>& f, int alpha,
                           double y, DiscretizationParams params);

// d^alpha/dy^alpha of the standard normal density, via the polynomial
// recursion p_0 = 1, p_{k+1}(z) = p_k'(z) - z p_k(z).
double gaussian_derivative(int alpha, double y);

struct ConvergenceRow {
  double c;
  int alpha;
  double sup_error;    // sup over the grid of |D^alpha f - gaussian deriv|
  bool dominance_ok;   // |D^alpha f(y)| <= K_alpha (1+y^2)^alpha e^{-|y|} on [-8,8]
};

// Sup-errors and dominance checks over the given evaluation grid for each
// (c, alpha) pair. Dominance constants: K = {1, 4, 16, 64} for alpha 0..3.
std::vector<ConvergenceRow> lemma_report(const std::vector<double>& c_values,
                                         const std::vector<int>& alphas,
                                         double grid_min, double grid_max,
                                         double grid_step);

}  // namespace rplan
