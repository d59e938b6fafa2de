#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace rplan {

// Sorted sample of real observations.
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int count() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
};

// Fraction of observations <= t (right-continuous step function).
double ecdf(const EmpiricalSample& sample, double t);

// One-sample Kolmogorov-Smirnov distance against a reference CDF; both
// one-sided gaps (value and left limit) are taken at every jump.
double ks_one_sample(const EmpiricalSample& sample,
                     const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b);

// Chi-square goodness of fit. Cells whose expected count falls below 5 are
// pooled with the adjacent cell (left to right; a small trailing group is
// merged backward). Returns (statistic, degrees of freedom).
std::pair<double, int> chi_square_gof(const std::vector<long long>& observed,
                                      const std::vector<double>& expected_probs,
                                      long long total);

// k-th raw sample moment with compensated summation.
double moments(const EmpiricalSample& sample, int k);

}  // namespace rplan
