#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieab/groebner.hpp"
#include "lieab/lie_algebra.hpp"

namespace lieab {

enum class Verdict { Yes, No, Undecided };
const char* to_string(Verdict v);

/// Closure: complete over the algebraic closure via the Nullstellensatz.
/// Ground: witness search in the ground field only; never answers No.
enum class SearchMode { Closure, Ground };
const char* to_string(SearchMode m);

/// Abelian subalgebra or abelian ideal.
enum class Target { Subalgebra, Ideal };

enum class ExecutionPolicy { Serial, Parallel };

/// Pivot columns of an RREF basis; parametrizes all k-dimensional subspaces
/// with these pivots.
struct PivotPattern {
  std::size_t ambient = 0;
  std::vector<std::size_t> pivots;  // strictly increasing, 0-based
};

/// All k-subsets of {0..n-1} in colexicographic order.
std::vector<PivotPattern> pivot_patterns(std::size_t n, std::size_t k);

/// One entry of a parametrized basis row: 0, 1, or a free variable.
struct RowEntry {
  enum class Kind { Zero, One, Variable } kind = Kind::Zero;
  std::size_t variable = 0;
};

/// Polynomial conditions on the free RREF entries of one pivot pattern.
/// Variables 0..free_variables-1 are the entries; variable free_variables
/// is the imaginary unit t (t^2 + 1 = 0), always reserved.
struct PatternSystem {
  PivotPattern pattern;
  std::vector<std::vector<RowEntry>> rows;
  std::size_t free_variables = 0;
  bool uses_imaginary_unit = false;  // t^2 + 1 already in `system`
  PolySystem system;

  std::size_t t_index() const { return free_variables; }
};

PatternSystem build_pattern_system(const LieAlgebra& g, const PivotPattern& pattern, Target target);

struct DecisionOptions {
  SearchMode mode = SearchMode::Closure;
  std::uint64_t pattern_budget = 100'000;
  std::uint64_t total_budget = 10'000'000;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
  /// Ground search and witness sampling use p/q with |p| <= height, 1 <= q <= height.
  int height = 2;
  bool extract_witness = true;
};

/// Budget defaults, with LIE_ABELIAN_BUDGET overriding the per-pattern budget.
DecisionOptions default_decision_options();

struct Decision {
  std::size_t k = 0;
  Target target = Target::Subalgebra;
  SearchMode mode = SearchMode::Closure;
  Verdict verdict = Verdict::Undecided;
  std::optional<Subspace> witness;
  std::size_t patterns = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t undecided = 0;
  std::size_t skipped = 0;  // not examined because an earlier pattern answered yes
  std::uint64_t reductions = 0;
  std::optional<std::size_t> yes_pattern;
};

/// Does g contain an abelian subalgebra (resp. abelian ideal) of dimension k?
Decision decide(const LieAlgebra& g, std::size_t k, Target target, const DecisionOptions& options);
Decision decide_abelian_subalgebra(const LieAlgebra& g, std::size_t k, const DecisionOptions& options);
Decision decide_abelian_ideal(const LieAlgebra& g, std::size_t k, const DecisionOptions& options);

/// Tries to find a concrete point of the pattern's variety with coordinates
/// from the height grid (Gaussian values allowed unless restricted to Q), then
/// checks the resulting subspace exactly. Returns nullopt on failure.
std::optional<Subspace> extract_witness(const LieAlgebra& g, const PatternSystem& ps, Target target,
                                        bool allow_gaussian, int height, std::uint64_t budget);

bool verify_witness(const LieAlgebra& g, const Subspace& s, Target target);

struct BoundRecord {
  std::string quantity;  // "alpha"
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string source;
};

struct InvariantReport {
  std::string algebra;
  std::size_t dimension = 0;
  SearchMode mode = SearchMode::Closure;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> beta;
  std::size_t alpha_lower = 0;  // largest k with a yes, even when alpha is undecided
  std::size_t beta_lower = 0;
  std::size_t beta_upper = 0;  // ground mode: largest k not refuted over the closure
  std::optional<Subspace> alpha_witness;
  std::optional<Subspace> beta_witness;
  std::vector<Decision> alpha_log;
  std::vector<Decision> beta_log;
  std::vector<BoundRecord> bounds;
};

/// Descends k = n, n-1, ... until decide_abelian_subalgebra says yes.
void compute_alpha(const LieAlgebra& g, const DecisionOptions& options, InvariantReport& report);
/// Same descent for abelian ideals, starting at alpha when known.
void compute_beta(const LieAlgebra& g, const DecisionOptions& options, InvariantReport& report);
/// Alpha, beta and bounds, with soundness cross-checks (beta <= alpha, and
/// beta = alpha for solvable algebras in closure mode). Throws
/// SoundnessViolation if a check fails.
InvariantReport compute_invariants(const LieAlgebra& g, const DecisionOptions& options);

}  // namespace lieab
