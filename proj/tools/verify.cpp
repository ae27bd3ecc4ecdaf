// verify <suite> [options]: runs verification cells and reports agreement.

#include "ctred/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <unistd.h>

namespace {

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

}  // namespace

int main(int argc, char** argv) {
  ctred::SuiteSpec spec;
  CLI::App app{"Exact verification of constant-term identities"};
  app.add_option("suite", spec.suite, "identity1 | identity2 | conjecture | morris | macdonald | reduction | jacobi | all")
      ->required();
  app.add_option("--n", spec.n, "single n");
  app.add_option("--m", spec.m, "single m");
  app.add_option("--a", spec.a, "single a");
  app.add_option("--b", spec.b, "single b");
  app.add_option("--c", spec.c, "single c");
  app.add_option("--k", spec.k, "single k");
  app.add_option("--order", spec.order, "series truncation order for the jacobi suite");
  app.add_option("--seed", spec.seed, "first fuzzer seed for the reduction suite");
  app.add_option("--samples", spec.samples, "fuzzer samples per n for the reduction suite");
  app.add_option("--max-n", spec.max_n, "upper end of the n range");
  app.add_option("--max-m", spec.max_m, "upper end of the m range");
  app.add_option("--max-abc", spec.max_abc, "upper end of the a, b, c, k ranges");
  app.add_flag("--json", spec.json, "emit a JSON array instead of a table");
  app.add_option("--threads", spec.threads, "worker threads across cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<ctred::VerificationReport> reports;
  try {
    reports = ctred::run_suites(spec);
  } catch (const ctred::UsageError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }

  const int code = ctred::exit_code(reports);
  if (spec.json) {
    std::cout << ctred::to_json(reports).dump(2) << '\n';
  } else {
    const bool color = use_color();
    for (const auto& r : reports) std::cout << ctred::format_text(r, color) << '\n';
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) (r.skipped ? skip : (r.equal ? pass : fail))++;
    std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  }
  if (code != 0)
    for (const auto& r : reports)
      if (!r.skipped && !r.equal) {
        std::cerr << ctred::format_failure(r);
        break;
      }
  return code;
}
