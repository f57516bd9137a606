#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "cclab/verify.hpp"

using namespace cclab;

// One line per acceptance criterion; criterion i is suite_names()[i - 1].
int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-10"};
  VerifyOptions o;
  app.add_option("--jobs", o.jobs, "worker threads");
  app.add_option("--seed", o.seed, "seed for sampled families");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  const auto& suites = suite_names();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    VerificationReport r;
    std::string error;
    try {
      r = verify_suite(suites[i], o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && r.ok();
    failed += !ok;
    std::printf("criterion %zu %-12s %s  (%zu checks, %zu failed, %.1f s)\n", i + 1, suites[i].c_str(),
                ok ? "PASS" : "FAIL", r.checks.size(), r.failures(), r.seconds);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const Check& c : r.checks)
      if (!c.pass) std::printf("    failed %s: %s %s\n", c.id.c_str(), c.slack.c_str(), c.witness.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, suites.size());
  return failed == 0 ? 0 : 1;
}
