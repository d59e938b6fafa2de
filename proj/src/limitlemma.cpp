#include "rplan/limitlemma.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rplan {

long long grid_index(double y, DiscretizationParams params) {
  // Small nudge keeps exact grid points in their own cell under rounding.
  return static_cast<long long>(
      std::floor(y * std::sqrt(params.c) + params.c + 1e-9));
}

namespace {

// Error of Stirling's approximation: lgamma(k+1) - ((k+1/2) log k - k
// + log(2 pi)/2).
long double stirlerr(long double k) {
  if (k < 16.0L)
    return std::lgamma(k + 1.0L) - (k + 0.5L) * std::log(k) + k -
           0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  const long double k2 = k * k;
  return (1.0L / 12 -
          (1.0L / 360 - (1.0L / 1260 - (1.0L / 1680 - 1.0L / (1188 * k2)) / k2) / k2) / k2) /
         k;
}

// x log(x/m) + m - x, evaluated through the (x-m)/(x+m) series when x is
// close to m so no large logs cancel.
long double bd0(long double x, long double m) {
  if (std::abs(x - m) < 0.1L * (x + m)) {
    const long double v = (x - m) / (x + m);
    const long double v2 = v * v;
    long double s = (x - m) * v;
    long double ej = 2.0L * x * v;
    for (int j = 1;; ++j) {
      ej *= v2;
      const long double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / m) + m - x;
}

}  // namespace

double poisson_step_density(double y, DiscretizationParams params) {
  if (params.c <= 0.0) throw std::invalid_argument("need c > 0");
  const long long k = grid_index(y, params);
  if (k < 0) return 0.0;
  // Saddle-point form: every log-space term stays O(1), so the pmf keeps
  // near-full relative accuracy even when c log c reaches ~1e5 and naive
  // "k log c - c - lgamma(k+1)" would cancel down to ~1e-11.
  const long double c = params.c;
  const long double kk = static_cast<long double>(k);
  long double pmf;
  if (k == 0) {
    pmf = std::exp(-c);
  } else {
    pmf = std::exp(-stirlerr(kk) - bd0(kk, c)) /
          std::sqrt(2.0L * std::numbers::pi_v<long double> * kk);
  }
  return static_cast<double>(std::sqrt(c) * pmf);
}

double grid_coordinate_shift(double y, DiscretizationParams params) {
  if (params.c <= 0.0) throw std::invalid_argument("need c > 0");
  const long long k = grid_index(y, params);
  return (static_cast<double>(k) + 1.0 - params.c) / std::sqrt(params.c);
}

double iterated_difference(const std::function<double(double)>& f, int alpha,
                           double y, DiscretizationParams params) {
  if (alpha < 0) throw std::invalid_argument("need alpha >= 0");
  const double h = params.step();
  std::vector<double> v(alpha + 1);
  for (int j = 0; j <= alpha; ++j) v[j] = f(y + j * h);
  for (int a = 1; a <= alpha; ++a)
    for (int j = 0; j <= alpha - a; ++j) v[j] = (v[j + 1] - v[j]) / h;
  return v[0];
}

double gaussian_derivative(int alpha, double y) {
  if (alpha < 0) throw std::invalid_argument("need alpha >= 0");
  // Coefficients of p_alpha, ascending powers.
  std::vector<double> p{1.0};
  for (int k = 0; k < alpha; ++k) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) next[i - 1] += i * p[i];  // p'
    for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] -= p[i];      // -z p
    p = std::move(next);
  }
  double poly = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) poly = poly * y + p[i];
  return poly * std::exp(-0.5 * y * y) / std::sqrt(2.0 * std::numbers::pi);
}

std::vector<ConvergenceRow> lemma_report(const std::vector<double>& c_values,
                                         const std::vector<int>& alphas,
                                         double grid_min, double grid_max,
                                         double grid_step) {
  if (grid_step <= 0.0 || grid_max < grid_min)
    throw std::invalid_argument("bad evaluation grid");
  static constexpr double kDominance[] = {1.0, 4.0, 16.0, 64.0};

  std::vector<ConvergenceRow> rows;
  for (double c : c_values) {
    const DiscretizationParams params{c};
    auto f = [params](double y) { return poisson_step_density(y, params); };
    for (int alpha : alphas) {
      if (alpha < 0 || alpha > 3)
        throw std::invalid_argument("lemma_report supports alpha in 0..3");
      double sup = 0.0;
      for (double y = grid_min; y <= grid_max + 1e-12; y += grid_step) {
        const double err =
            std::abs(iterated_difference(f, alpha, y, params) -
                     gaussian_derivative(alpha, y));
        sup = std::max(sup, err);
      }
      bool dominance_ok = true;
      for (double y = -8.0; y <= 8.0 + 1e-12; y += 1.0 / 128.0) {
        const double lhs = std::abs(iterated_difference(f, alpha, y, params));
        const double bound = kDominance[alpha] *
                             std::pow(1.0 + y * y, alpha) * std::exp(-std::abs(y));
        if (lhs > bound) {
          dominance_ok = false;
          break;
        }
      }
      rows.push_back({c, alpha, sup, dominance_ok});
    }
  }
  return rows;
}

}  // namespace rplan
