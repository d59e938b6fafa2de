#include "rplan/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace rplan {

ExactDistribution::ExactDistribution(int n, int d, std::vector<Entry> entries,
                                     Int total)
    : n_(n), d_(d), entries_(std::move(entries)), total_(std::move(total)) {
  cumulative_.reserve(entries_.size());
  Int cum = 0;
  for (const auto& e : entries_) {
    cum += e.count * e.count;
    cumulative_.push_back(cum);
  }
}

std::shared_ptr<const ExactDistribution> exact_distribution(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  if (n > 20000) throw ResourceLimitError("exact_distribution guard: n <= 20000");

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ExactDistribution>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
  }

  std::vector<ExactDistribution::Entry> entries;
  Int total = 0;
  for (const auto& shape : partitions(n, d)) {
    Int count = det_count(shape, d);
    total += count * count;
    entries.push_back({shape, std::move(count), Rat()});
  }
  for (auto& e : entries) {
    e.probability = Rat(e.count * e.count, total);
    e.probability.canonicalize();
  }
  auto dist = std::make_shared<const ExactDistribution>(n, d, std::move(entries),
                                                        std::move(total));
  std::lock_guard<std::mutex> lock(mu);
  cache.insert({{n, d}, dist});
  return dist;
}

Int total_count(int n, int d) { return exact_distribution(n, d)->total(); }

YoungDiagram sample_diagram(const ExactDistribution& dist, RandomStream& rng) {
  Rat u(rng.uniform());
  Rat threshold = u * Rat(dist.total());
  const auto& cum = dist.cumulative();
  // First index with cumulative > threshold.
  std::size_t lo = 0, hi = cum.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (Rat(cum[mid]) > threshold)
      hi = mid;
    else
      lo = mid + 1;
  }
  return dist.entries()[lo].diagram;
}

Permutation sample_permutation(int n, int d, RandomStream& rng) {
  auto dist = exact_distribution(n, d);
  YoungDiagram shape = sample_diagram(*dist, rng);
  StandardTableau insertion = sample_syt(shape, rng);
  StandardTableau recording = sample_syt(shape, rng);
  return inverse_rsk(insertion, recording);
}

Permutation rejection_sample_permutation(int n, int d, RandomStream& rng) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  if (d < n && n > 12)
    throw ResourceLimitError("rejection sampler guard: n <= 12 for d < n");
  std::vector<int> values(n);
  for (;;) {
    std::iota(values.begin(), values.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(values[i], values[j]);
    }
    Permutation p(values);
    if (lds(p) <= d) return p;
  }
}

RescaledRows rescale_rows(const YoungDiagram& shape, int n, int d) {
  if (shape.size() != n) throw std::invalid_argument("|shape| != n");
  if (shape.row_count() > d)
    throw std::invalid_argument("shape has more rows than d");
  const double mean = static_cast<double>(n) / d;
  const double scale = std::sqrt(mean);
  RescaledRows out;
  out.x.resize(d);
  out.y.resize(d);
  for (int i = 0; i < d; ++i) {
    out.y[i] = (shape.row(i) - mean) / scale;
    out.x[i] = std::sqrt(2.0) * out.y[i];
  }
  return out;
}

}  // namespace rplan
