// Acceptance runner: one summary per criterion, exit 1 when any fails.
// Usage: acceptance [id ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "plasma/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > plasma::kCriterionCount) {
      std::cerr << "criterion id must be in [1, " << plasma::kCriterionCount << "]\n";
      return 2;
    }
    ids.push_back(id);
  }
  if (ids.empty())
    for (int i = 1; i <= plasma::kCriterionCount; ++i) ids.push_back(i);

  int failed = 0;
  for (const int id : ids) {
    const auto start = std::chrono::steady_clock::now();
    const plasma::CriterionResult r = plasma::run_criterion(id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << r.summary();
    char tail[32];
    std::snprintf(tail, sizeof tail, "    (%.1fs)\n", secs);
    std::cout << tail << std::flush;
    if (!r.pass()) ++failed;
  }
  return failed ? 1 : 0;
}
