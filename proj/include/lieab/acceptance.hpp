#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lieab/decision.hpp"
#include "lieab/matrix.hpp"

namespace lieab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  std::size_t base_changes = 20;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

/// Invertible n x n matrix with small random rational entries.
Matrix random_invertible_matrix(std::size_t n, std::mt19937_64& rng);

/// Family specs the acceptance suite and property tests run over.
const std::vector<std::string>& acceptance_corpus();

/// Runs every acceptance criterion in order; `on_result` sees each result as
/// soon as it is available.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace lieab
