// Acceptance gate: runs the ten-check battery and prints one PASS/FAIL line
// per check.  Exit status is nonzero when any check fails.
#include <cstdio>
#include <cstdlib>

#include "ridgekit/verify.hpp"

int main(int argc, char** argv) {
  const unsigned seed = argc > 1 ? unsigned(std::strtoul(argv[1], nullptr, 10)) : 1234u;
  const auto results = ridgekit::run_full_battery(seed);
  bool all_pass = true;
  int i = 0;
  for (const auto& r : results) {
    ++i;
    std::printf("%s [%d/%d] %s — %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", i,
                int(results.size()), r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
