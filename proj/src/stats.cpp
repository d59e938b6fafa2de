#include "rplan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rplan {

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty sample");
  std::sort(values_.begin(), values_.end());
}

double ecdf(const EmpiricalSample& sample, double t) {
  const auto& v = sample.values();
  auto it = std::upper_bound(v.begin(), v.end(), t);
  return static_cast<double>(it - v.begin()) / sample.count();
}

double ks_one_sample(const EmpiricalSample& sample,
                     const std::function<double(double)>& cdf) {
  const auto& v = sample.values();
  const double n = sample.count();
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    // Both one-sided gaps at the jump; the lower one against the left limit
    // of the cdf, so an atomic reference (e.g. the sample's own ECDF)
    // compares as 0.
    d = std::max(d, std::abs((i + 1) / n - cdf(v[i])));
    d = std::max(
        d, std::abs(i / n - cdf(std::nextafter(
                        v[i], -std::numeric_limits<double>::infinity()))));
  }
  return d;
}

double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
  const auto& va = a.values();
  const auto& vb = b.values();
  double d = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < va.size() || ib < vb.size()) {
    const double t = (ib == vb.size() || (ia < va.size() && va[ia] <= vb[ib]))
                         ? va[ia]
                         : vb[ib];
    while (ia < va.size() && va[ia] <= t) ++ia;
    while (ib < vb.size() && vb[ib] <= t) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / va.size() -
                             static_cast<double>(ib) / vb.size()));
  }
  return d;
}

std::pair<double, int> chi_square_gof(const std::vector<long long>& observed,
                                      const std::vector<double>& expected_probs,
                                      long long total) {
  if (observed.size() != expected_probs.size() || observed.size() < 2)
    throw std::invalid_argument("need >= 2 cells with matching expectations");
  double prob_sum = 0.0;
  for (double p : expected_probs) {
    if (p < 0.0) throw std::invalid_argument("negative expected probability");
    prob_sum += p;
  }
  if (std::abs(prob_sum - 1.0) > 1e-9)
    throw std::invalid_argument("expected probabilities must sum to 1");
  if (total <= 0) throw std::invalid_argument("need total > 0");

  // Pool adjacent cells until every pooled expected count is >= 5.
  std::vector<double> exp_pooled;
  std::vector<long long> obs_pooled;
  double e_acc = 0.0;
  long long o_acc = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    e_acc += expected_probs[i] * total;
    o_acc += observed[i];
    if (e_acc >= 5.0) {
      exp_pooled.push_back(e_acc);
      obs_pooled.push_back(o_acc);
      e_acc = 0.0;
      o_acc = 0;
    }
  }
  if (e_acc > 0.0 || o_acc > 0) {
    if (exp_pooled.empty()) throw std::invalid_argument("expected counts too small");
    exp_pooled.back() += e_acc;
    obs_pooled.back() += o_acc;
  }
  if (exp_pooled.size() < 2)
    throw std::invalid_argument("fewer than 2 cells after pooling");

  double stat = 0.0;
  for (std::size_t i = 0; i < exp_pooled.size(); ++i) {
    const double diff = obs_pooled[i] - exp_pooled[i];
    stat += diff * diff / exp_pooled[i];
  }
  return {stat, static_cast<int>(exp_pooled.size()) - 1};
}

double moments(const EmpiricalSample& sample, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  double sum = 0.0, comp = 0.0;  // Kahan
  for (double v : sample.values()) {
    const double term = std::pow(v, k) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum / sample.count();
}

}  // namespace rplan
