// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>

#include "coxfold/acceptance.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (const coxfold::CriterionResult& r : coxfold::run_acceptance()) {
    std::printf("%s criterion %d (%s): %s -- %s\n", r.passed ? "PASS" : "FAIL", r.number, r.tag.c_str(),
                r.title.c_str(), r.detail.back().c_str());
    if (!r.passed)
      for (size_t i = 0; i + 1 < r.detail.size(); ++i) std::printf("    %s\n", r.detail[i].c_str());
    all = all && r.passed;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::printf("%s in %.1f s\n", all ? "all criteria passed" : "some criteria failed", elapsed.count());
  return all ? 0 : 1;
}
