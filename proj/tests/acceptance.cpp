// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Optional arguments select criterion numbers.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "arcdiag/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace arcdiag;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  AcceptanceOptions opt;
  std::cout << "seed " << opt.seed << ", truncation N=" << opt.truncation << std::endl;
  int failed = 0;
  run_acceptance(opt, only, [&](const CriterionResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.detail
              << "]  " << secs << std::endl;
    if (!r.pass) {
      ++failed;
      if (!r.witness.empty()) std::cout << "  witness: " << r.witness << std::endl;
    }
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
