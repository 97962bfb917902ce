#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace amalgam {

struct CheckResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts and witnesses worth reporting
};

inline constexpr uint64_t kAcceptanceSeed = 1229;

// The ten end-to-end checks, in order, deterministic for a fixed seed.
// jobs > 1 runs checks concurrently; the result order is unaffected.
std::vector<CheckResult> run_acceptance(uint64_t seed = kAcceptanceSeed, int jobs = 1);

// One check by its 1-based number; same derived random stream as the full run.
CheckResult run_check(int number, uint64_t seed = kAcceptanceSeed);

bool all_pass(const std::vector<CheckResult>& results);

// One line per check: "[PASS] <n> <name> (<detail>)".
std::string format_acceptance(const std::vector<CheckResult>& results);

}  // namespace amalgam
