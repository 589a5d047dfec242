// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "lieab/acceptance.hpp"

int main(int argc, char** argv) {
  lieab::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--serial") options.policy = lieab::ExecutionPolicy::Serial;
    else if (arg == "--seed" && i + 1 < argc) options.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  std::cout << "acceptance seed " << options.seed << "\n";
  const auto results = lieab::run_acceptance(options, [](const lieab::CriterionResult& r) {
    std::cout << lieab::format_result(r) << std::endl;
  });
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
