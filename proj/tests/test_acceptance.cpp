// One pass/fail line per acceptance criterion; exits non-zero if any fails.
// Pass criterion numbers as arguments to run a subset.

#include <cstdlib>
#include <iostream>

#include "thompson/acceptance.hpp"

int main(int argc, char** argv) {
  thompson::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  int failed = 0;
  thompson::run_acceptance(options, [&](const thompson::CriterionResult& r) {
    std::cout << thompson::format_result(r) << std::flush;
    failed += !r.passed;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
