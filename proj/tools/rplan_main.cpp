#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rplan/cli_core.hpp"
#include "rplan/common.hpp"

namespace {

// Exit codes: 0 success, 2 argument/parse error, 3 I/O error,
// 4 internal consistency failure (e.g. counter disagreement).
int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return 3;
  }
  out << text;
  if (!out) {
    std::cerr << "error: write failed for " << out_path << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Plancherel measure vs traceless GUE toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global --out after a subcommand name

  std::string out_path;
  app.add_option("--out", out_path, "output file (default: stdout)");

  std::string shape_text;
  auto* count = app.add_subcommand("count", "tableau counts for one shape");
  count->add_option("shape", shape_text, "comma-separated parts, e.g. 3,1")
      ->required();

  int n = 1000, d = 2, workers = 1;
  long samples = 20000;
  std::uint64_t seed = 1;
  bool timing = false;
  auto* dist = app.add_subcommand("dist", "exact distribution table CSV");
  dist->add_option("--n", n)->required();
  dist->add_option("--d", d)->required();

  auto* compare = app.add_subcommand("compare", "diagram rows vs GUE0 spectra");
  compare->add_option("--n", n);
  compare->add_option("--d", d);
  compare->add_option("--samples", samples);
  compare->add_option("--seed", seed);
  compare->add_option("--workers", workers);
  compare->add_flag("--timing", timing, "include runtime_seconds in the JSON");

  auto* dhw = app.add_subcommand("dhw", "exact d=2 law vs the chi(3) CDF");
  dhw->add_option("--n", n);
  dhw->add_option("--seed", seed);

  rplan::cli::LemmaConfig lemma_cfg;
  auto* lemma = app.add_subcommand("lemma", "local limit convergence table");
  lemma->add_option("--c", lemma_cfg.c_values);
  lemma->add_option("--alpha", lemma_cfg.alphas);
  lemma->add_option("--grid-min", lemma_cfg.grid_min);
  lemma->add_option("--grid-max", lemma_cfg.grid_max);
  lemma->add_option("--grid-step", lemma_cfg.grid_step);

  std::string kind;
  auto* sample = app.add_subcommand("sample", "draw CSV (perm, diagram, gue0)");
  sample->add_option("kind", kind, "perm | diagram | gue0")->required();
  sample->add_option("--n", n);
  sample->add_option("--d", d);
  sample->add_option("--samples", samples);
  sample->add_option("--seed", seed);
  sample->add_option("--workers", workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string text;
    if (*count) {
      text = rplan::cli::count_report(shape_text);
    } else if (*dist) {
      text = rplan::cli::dist_csv(n, d);
    } else if (*compare) {
      text = rplan::cli::compare_report_json(
          {n, d, samples, seed, workers, timing});
    } else if (*dhw) {
      text = rplan::cli::dhw_report_json({n, seed});
    } else if (*lemma) {
      text = rplan::cli::lemma_csv(lemma_cfg);
    } else if (*sample) {
      text = rplan::cli::sample_csv({kind, n, d, samples, seed, workers});
    }
    return write_output(text, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
