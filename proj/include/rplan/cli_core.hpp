#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rplan::cli {

struct CompareConfig {
  int n = 1000;
  int d = 2;
  long samples = 20000;
  std::uint64_t seed = 1;
  int workers = 1;
  bool timing = false;  // wall-clock field breaks byte-determinism; opt-in
};

struct DhwConfig {
  int n = 1000;
  std::uint64_t seed = 0;  // unused (exact computation); echoed for audit
};

struct LemmaConfig {
  std::vector<double> c_values = {1e2, 1e3, 1e4};
  std::vector<int> alphas = {0, 1, 2};
  double grid_min = -3.0;
  double grid_max = 3.0;
  double grid_step = 0.01;
};

struct SampleConfig {
  std::string kind;  // "perm", "diagram", "gue0"
  int n = 10;
  int d = 2;
  long samples = 10;
  std::uint64_t seed = 1;
  int workers = 1;
};

// Triple tableau count for a shape string such as "3,1"; throws
// std::logic_error if the counters disagree.
std::string count_report(const std::string& shape_text);

// Exact distribution table, columns shape,count,probability,prob_exact.
std::string dist_csv(int n, int d);

// Rescaled-diagram vs GUE0 comparison; deterministic JSON for identical
// configs regardless of worker count (unless timing is enabled).
std::string compare_report_json(const CompareConfig& cfg);

// Exact d=2 law of the first row vs the chi(3) distribution.
std::string dhw_report_json(const DhwConfig& cfg);

// Convergence table CSV, columns c,alpha,sup_error,dominance_ok.
std::string lemma_csv(const LemmaConfig& cfg);

// Draw CSV in the per-kind schema.
std::string sample_csv(const SampleConfig& cfg);

}  // namespace rplan::cli
