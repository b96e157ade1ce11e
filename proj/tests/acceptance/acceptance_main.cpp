// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff everything passed.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qk/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20260809ull;
  bool all_ok = true;
  for (int k = 1; k <= qk::num_criteria(); ++k) {
    const auto checks = qk::run_criterion(k, seed);
    bool ok = true;
    double seconds = 0.0;
    std::string detail;
    for (const auto& c : checks) {
      ok = ok && c.pass;
      seconds = std::max(seconds, c.seconds);
      if (!c.pass)
        detail += "  [" + c.name + ": " + std::to_string(c.measured) + " !" + c.relation + " " +
                  std::to_string(c.threshold) + "]";
    }
    std::printf("criterion %2d: %s  (%zu checks, %.2fs)%s\n", k, ok ? "PASS" : "FAIL",
                checks.size(), seconds, detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
