#pragma once

// The twelve end-to-end acceptance checks, shared by the acceptance test
// binary and the `verify-paper` command.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thompson {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> notes;  // one line per sub-check
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::vector<int> only;  // empty: all twelve
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

const std::vector<std::string>& criterion_names();

CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs the selected criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 counting oracle (0.41 s)" followed by indented notes.
std::string format_result(const CriterionResult& r);

}  // namespace thompson
