#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "amalgam/acceptance.hpp"

// Runs the ten end-to-end checks and prints one line each; exits nonzero if
// any fails. Flags: --seed N, --jobs N.
int main(int argc, char** argv) {
  uint64_t seed = amalgam::kAcceptanceSeed;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--jobs" && i + 1 < argc) {
      jobs = int(std::strtol(argv[++i], nullptr, 10));
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--jobs N]\n", argv[0]);
      return 2;
    }
  }
  auto results = amalgam::run_acceptance(seed, jobs);
  std::fputs(amalgam::format_acceptance(results).c_str(), stdout);
  return amalgam::all_pass(results) ? 0 : 1;
}
