#pragma once

#include <memory>
#include <vector>

#include "rplan/combinatorics.hpp"
#include "rplan/common.hpp"
#include "rplan/random.hpp"

namespace rplan {

// Exact restricted Plancherel distribution on partitions of n into at most
// d parts: P(lambda) = N_lambda^2 / C_{n,d} with C_{n,d} = sum N_mu^2.
class ExactDistribution {
 public:
  struct Entry {
    YoungDiagram diagram;
    Int count;         // N_lambda
    Rat probability;   // N_lambda^2 / total
  };

  ExactDistribution(int n, int d, std::vector<Entry> entries, Int total);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Int& total() const { return total_; }

  // Cumulative counts sum_{mu <= k} N_mu^2, used for exact CDF inversion.
  const std::vector<Int>& cumulative() const { return cumulative_; }

 private:
  int n_, d_;
  std::vector<Entry> entries_;
  Int total_;
  std::vector<Int> cumulative_;
};

// Rescaled diagram rows per the main limit theorem:
//   y_i = (lambda_i - n/d) / sqrt(n/d),  x_i = sqrt(2) * y_i.
struct RescaledRows {
  std::vector<double> x;
  std::vector<double> y;
};

// Builds the exact table; memoized per (n, d) within the process.
std::shared_ptr<const ExactDistribution> exact_distribution(int n, int d);

// C_{n,d} = sum of N_lambda^2 = number of permutations of S_n whose longest
// decreasing subsequence is at most d.
Int total_count(int n, int d);

// Inverse-CDF draw over the exact table (one uniform variate, compared
// against exact cumulative rationals).
YoungDiagram sample_diagram(const ExactDistribution& dist, RandomStream& rng);

// Uniform over {p in S_n : lds(p) <= d}: diagram + two independent tableaux
// + inverse RSK.
Permutation sample_permutation(int n, int d, RandomStream& rng);

// Independent oracle: Fisher-Yates draw, accept iff lds <= d.
// Guard: n <= 12 unless d >= n.
Permutation rejection_sample_permutation(int n, int d, RandomStream& rng);

// Theorem-scale rescaling; missing rows are padded with zero-length rows.
RescaledRows rescale_rows(const YoungDiagram& shape, int n, int d);

}  // namespace rplan
