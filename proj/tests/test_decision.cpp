#include <doctest.h>

#include "lieab/acceptance.hpp"
#include "lieab/corpus.hpp"
#include "lieab/decision.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

using namespace lieab;

namespace {

DecisionOptions closure_options(ExecutionPolicy policy = ExecutionPolicy::Parallel) {
  DecisionOptions o;
  o.policy = policy;
  return o;
}

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<Vector> vs;
  for (auto i : one_based) vs.push_back(unit_vector(n, i - 1));
  return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("pivot patterns are the k-subsets in colex order") {
  const auto p = pivot_patterns(4, 2);
  REQUIRE(p.size() == 6);
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i].pivots == expected[i]);
  CHECK(pivot_patterns(5, 0).size() == 1);
  CHECK(pivot_patterns(5, 5).size() == 1);
  CHECK(pivot_patterns(7, 3).size() == 35);
}

TEST_CASE("pattern system layout") {
  const LieAlgebra g = family("n3");
  const PatternSystem ps = build_pattern_system(g, PivotPattern{3, {0, 1}}, Target::Subalgebra);
  CHECK(ps.free_variables == 2);  // the two entries in column 3
  CHECK(!ps.uses_imaginary_unit);
  REQUIRE(ps.rows.size() == 2);
  CHECK(ps.rows[0][0].kind == RowEntry::Kind::One);
  CHECK(ps.rows[0][1].kind == RowEntry::Kind::Zero);
  CHECK(ps.rows[0][2].kind == RowEntry::Kind::Variable);
  // [e1 + a e3, e2 + b e3] = e3 is never zero.
  CHECK(ps.system.polys.size() == 1);
  CHECK(ps.system.polys[0].is_constant());

  const PatternSystem qi = build_pattern_system(family("g4:i"), PivotPattern{4, {0}}, Target::Ideal);
  CHECK(qi.uses_imaginary_unit);
}

TEST_CASE("small decisions") {
  const auto o = closure_options();
  CHECK(decide_abelian_subalgebra(family("n3"), 2, o).verdict == Verdict::Yes);
  CHECK(decide_abelian_subalgebra(family("n3"), 3, o).verdict == Verdict::No);
  CHECK(decide_abelian_subalgebra(family("sl2"), 2, o).verdict == Verdict::No);
  CHECK(decide_abelian_ideal(family("sl2"), 1, o).verdict == Verdict::No);
  CHECK(decide_abelian_ideal(family("r2"), 1, o).verdict == Verdict::Yes);
  CHECK(decide_abelian_subalgebra(family("g5_1"), 0, o).verdict == Verdict::Yes);

  const Decision d = decide_abelian_ideal(family("f:5"), 4, o);
  REQUIRE(d.verdict == Verdict::Yes);
  REQUIRE(d.witness);
  CHECK(*d.witness == span_of(5, {2, 3, 4, 5}));
  CHECK(d.yes + d.no + d.undecided + d.skipped == d.patterns);
}

TEST_CASE("witness verification") {
  const LieAlgebra g = family("n3");
  CHECK(verify_witness(g, span_of(3, {1, 3}), Target::Subalgebra));
  CHECK(verify_witness(g, span_of(3, {1, 3}), Target::Ideal));
  CHECK(!verify_witness(g, span_of(3, {1, 2}), Target::Subalgebra));
  CHECK(!verify_witness(family("f:4"), span_of(4, {1, 4}), Target::Ideal));
  CHECK(verify_witness(family("f:4"), span_of(4, {1, 4}), Target::Subalgebra));
}

TEST_CASE("invariant reports") {
  const auto o = closure_options();
  const InvariantReport r = compute_invariants(family("sl2"), o);
  CHECK(r.alpha == 1u);
  CHECK(r.beta == 0u);
  REQUIRE(r.alpha_witness);
  CHECK(r.alpha_witness->dimension() == 1);

  const InvariantReport h = compute_invariants(family("n4"), o);
  CHECK(h.alpha == 3u);
  CHECK(h.beta == 3u);
  REQUIRE(h.beta_witness);
  CHECK(is_ideal(family("n4"), *h.beta_witness));
  CHECK(!h.bounds.empty());
}

TEST_CASE("ground mode never refutes a k that holds over the closure") {
  DecisionOptions o;
  o.mode = SearchMode::Ground;
  const LieAlgebra q = family("twist4:Q");
  const Decision d1 = decide_abelian_ideal(q, 1, o);
  CHECK(d1.verdict == Verdict::Yes);
  const Decision d2 = decide_abelian_ideal(q, 2, o);
  CHECK(d2.verdict == Verdict::Undecided);

  const InvariantReport r = compute_invariants(q, o);
  CHECK(!r.beta);
  CHECK(r.beta_lower == 1);
  CHECK(r.beta_upper == 2);

  // Over Q(i) the same brackets do have a two-dimensional abelian ideal.
  const InvariantReport gi = compute_invariants(family("twist4:QI"), o);
  CHECK(gi.beta == 2u);
}

TEST_CASE("budgets are enforced") {
  DecisionOptions o;
  o.pattern_budget = 1;
  o.total_budget = 1;
  std::mt19937_64 rng(1);
  const LieAlgebra g = change_of_basis(family("g5_4"), random_invertible_matrix(5, rng));
  const Decision d = decide_abelian_subalgebra(g, 4, o);
  CHECK(d.verdict == Verdict::Undecided);
  CHECK(d.undecided > 0);
  const InvariantReport r = compute_invariants(g, o);
  CHECK(!r.alpha);
}

TEST_CASE("environment override for the pattern budget") {
  setenv("LIE_ABELIAN_BUDGET", "1234", 1);
  CHECK(default_decision_options().pattern_budget == 1234u);
  unsetenv("LIE_ABELIAN_BUDGET");
  CHECK(default_decision_options().pattern_budget == DecisionOptions{}.pattern_budget);
}
