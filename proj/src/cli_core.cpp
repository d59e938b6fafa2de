#include "rplan/cli_core.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rplan/combinatorics.hpp"
#include "rplan/limitlemma.hpp"
#include "rplan/plancherel.hpp"
#include "rplan/rmt.hpp"
#include "rplan/stats.hpp"

namespace rplan::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// CDF of the chi distribution with 3 degrees of freedom (length of a
// standard Gaussian vector in R^3).
double chi3_cdf(double t) {
  if (t <= 0.0) return 0.0;
  return std::erf(t / std::numbers::sqrt2) -
         std::sqrt(2.0 / std::numbers::pi) * t * std::exp(-0.5 * t * t);
}

// Runs fn(i) for i in [0, count) across the requested worker threads;
// results must be written into index-addressed slots by fn itself.
void run_indexed(long count, int workers, const std::function<void(long)>& fn) {
  workers = std::max(1, workers);
  if (workers == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::string count_report(const std::string& shape_text) {
  const YoungDiagram shape = YoungDiagram::parse(shape_text);
  const int d = std::max(1, shape.row_count());
  const Int hook = hook_count(shape);
  const Int det = det_count(shape, d);
  if (hook != det)
    throw std::logic_error("counter mismatch: hook=" + hook.get_str() +
                           " det=" + det.get_str());
  std::ostringstream out;
  out << "shape=" << shape.to_string() << '\n';
  out << "hook_count=" << hook.get_str() << '\n';
  out << "det_count=" << det.get_str() << '\n';
  if (shape.size() <= 12) {
    const Int path = path_count_oracle(shape, d);
    if (path != hook)
      throw std::logic_error("counter mismatch: hook=" + hook.get_str() +
                             " path=" + path.get_str());
    out << "path_count=" << path.get_str() << '\n';
  }
  return out.str();
}

std::string dist_csv(int n, int d) {
  auto dist = exact_distribution(n, d);
  std::ostringstream out;
  out << "shape,count,probability,prob_exact\n";
  for (const auto& e : dist->entries()) {
    out << '"' << e.diagram.to_string() << "\"," << e.count.get_str() << ','
        << fmt17(e.probability.get_d()) << ',' << e.probability.get_str()
        << '\n';
  }
  return out.str();
}

std::string compare_report_json(const CompareConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  auto dist = exact_distribution(cfg.n, cfg.d);
  const long m = cfg.samples;

  // Per-coordinate draws; stream index = sample index (diagram side) or
  // m + sample index (matrix side), so results are scheduler-independent.
  std::vector<std::vector<double>> diag_x(cfg.d, std::vector<double>(m));
  std::vector<std::vector<double>> gue_x(cfg.d, std::vector<double>(m));
  run_indexed(m, cfg.workers, [&](long i) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(i));
    const YoungDiagram shape = sample_diagram(*dist, rng);
    const RescaledRows rows = rescale_rows(shape, cfg.n, cfg.d);
    for (int k = 0; k < cfg.d; ++k) diag_x[k][i] = rows.x[k];
  });
  run_indexed(m, cfg.workers, [&](long i) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(m + i));
    const HermitianMatrix b = sample_gue0(cfg.d, rng);
    const std::vector<double> spec = eigenvalues(b);
    for (int k = 0; k < cfg.d; ++k) gue_x[k][i] = spec[k];
  });

  Json ks = Json::object();
  Json diag_mean = Json::array(), diag_second = Json::array();
  Json gue_mean = Json::array(), gue_second = Json::array();
  for (int k = 0; k < cfg.d; ++k) {
    EmpiricalSample a(diag_x[k]);
    EmpiricalSample b(gue_x[k]);
    ks["x" + std::to_string(k + 1)] = ks_two_sample(a, b);
    diag_mean.push_back(moments(a, 1));
    diag_second.push_back(moments(a, 2));
    gue_mean.push_back(moments(b, 1));
    gue_second.push_back(moments(b, 2));
  }

  Json report;
  // Worker count is deliberately not echoed: results are independent of it
  // and the report must be byte-identical across worker counts.
  report["config"] = {{"subcommand", "compare"},
                      {"n", cfg.n},
                      {"d", cfg.d},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed}};
  report["version"] = kVersion;
  report["ks"] = ks;
  report["moments"] = {
      {"diagram", {{"mean", diag_mean}, {"second", diag_second}}},
      {"gue0", {{"mean", gue_mean}, {"second", gue_second}}}};
  if (cfg.timing) {
    report["runtime_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  return report.dump(2) + "\n";
}

std::string dhw_report_json(const DhwConfig& cfg) {
  auto dist = exact_distribution(cfg.n, 2);
  const double scale = std::sqrt(8.0 / cfg.n);
  const double half = cfg.n / 2.0;

  // Atoms of sqrt(8/n) (lambda_1 - n/2), ascending in lambda_1.
  struct Atom {
    double x;
    Rat prob;
  };
  std::vector<Atom> atoms;
  for (const auto& e : dist->entries())
    atoms.push_back({scale * (e.diagram.row(0) - half), e.probability});
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.x < b.x; });

  double sup = 0.0;
  Rat cum = 0;
  for (const auto& a : atoms) {
    const double f = chi3_cdf(a.x);
    sup = std::max(sup, std::abs(cum.get_d() - f));
    cum += a.prob;
    sup = std::max(sup, std::abs(cum.get_d() - f));
  }

  Json report;
  report["config"] = {{"subcommand", "dhw"}, {"n", cfg.n}, {"d", 2},
                      {"seed", cfg.seed}};
  report["version"] = kVersion;
  report["sup_distance"] = sup;
  return report.dump(2) + "\n";
}

std::string lemma_csv(const LemmaConfig& cfg) {
  const auto rows = lemma_report(cfg.c_values, cfg.alphas, cfg.grid_min,
                                 cfg.grid_max, cfg.grid_step);
  std::ostringstream out;
  out << "c,alpha,sup_error,dominance_ok\n";
  for (const auto& r : rows)
    out << fmt17(r.c) << ',' << r.alpha << ',' << fmt17(r.sup_error) << ','
        << (r.dominance_ok ? "true" : "false") << '\n';
  return out.str();
}

std::string sample_csv(const SampleConfig& cfg) {
  const long m = cfg.samples;
  std::vector<std::string> lines(m);
  std::ostringstream out;

  if (cfg.kind == "perm") {
    auto dist = exact_distribution(cfg.n, cfg.d);  // warm the memo once
    (void)dist;
    out << "draw_index,perm\n";
    run_indexed(m, cfg.workers, [&](long i) {
      RandomStream rng(cfg.seed, static_cast<std::uint64_t>(i));
      const Permutation p = sample_permutation(cfg.n, cfg.d, rng);
      std::ostringstream row;
      row << i << ",\"";
      for (int j = 0; j < p.size(); ++j) {
        if (j) row << ',';
        row << p.values()[j];
      }
      row << "\"\n";
      lines[i] = row.str();
    });
  } else if (cfg.kind == "diagram") {
    auto dist = exact_distribution(cfg.n, cfg.d);
    out << "draw_index,shape\n";
    run_indexed(m, cfg.workers, [&](long i) {
      RandomStream rng(cfg.seed, static_cast<std::uint64_t>(i));
      const YoungDiagram shape = sample_diagram(*dist, rng);
      lines[i] = std::to_string(i) + ",\"" + shape.to_string() + "\"\n";
    });
  } else if (cfg.kind == "gue0") {
    out << "draw_index";
    for (int k = 1; k <= cfg.d; ++k) out << ",x" << k;
    out << '\n';
    run_indexed(m, cfg.workers, [&](long i) {
      RandomStream rng(cfg.seed, static_cast<std::uint64_t>(i));
      const std::vector<double> spec = eigenvalues(sample_gue0(cfg.d, rng));
      std::ostringstream row;
      row << i;
      for (double v : spec) row << ',' << fmt17(v);
      row << '\n';
      lines[i] = row.str();
    });
  } else {
    throw std::invalid_argument("unknown sample kind: " + cfg.kind);
  }
  for (const auto& l : lines) out << l;
  return out.str();
}

}  // namespace rplan::cli
