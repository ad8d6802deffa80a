// One PASS/FAIL line per acceptance criterion. Exit status is 0 iff every
// selected criterion passes.

#include <cstdio>
#include <iostream>
#include <vector>

#include "CLI11.hpp"

#include "ggx/tools/corpus.hpp"
#include "ggx/tools/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ggx acceptance criteria", "ggx_acceptance"};
  std::vector<int> ids;
  std::string corpus;
  bool verbose = false;
  ggx::tools::SuiteOptions options;
  app.add_option("--criterion", ids, "Criterion numbers to run (default: all)")
      ->check(CLI::Range(1, ggx::tools::kCriterionCount));
  app.add_option("--corpus", corpus, "Corpus file instead of the built-in one");
  app.add_option("--budget", options.budget, "Hole-search step budget");
  app.add_option("--jobs", options.jobs, "Worker threads");
  app.add_flag("-v,--verbose", verbose, "Per-group progress on stderr");
  CLI11_PARSE(app, argc, argv);

  options.corpus = corpus.empty() ? ggx::tools::default_corpus() : ggx::tools::load_corpus(corpus);
  if (verbose) options.progress = &std::cerr;
  if (ids.empty()) {
    for (int id = 1; id <= ggx::tools::kCriterionCount; ++id) ids.push_back(id);
  }

  bool all = true;
  for (const int id : ids) {
    const auto r = ggx::tools::run_criterion(id, options);
    all = all && r.pass;
    std::printf("%s criterion %d (%s) %.2fs: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
