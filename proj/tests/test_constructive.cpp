#include <doctest.h>

#include "lieab/acceptance.hpp"
#include "lieab/constructive.hpp"
#include "lieab/corpus.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

using namespace lieab;

namespace {

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<Vector> vs;
  for (auto i : one_based) vs.push_back(unit_vector(n, i - 1));
  return Subspace::span(n, vs);
}

void check_abelian_ideal(const LieAlgebra& g, const Subspace& s, std::size_t dim) {
  CHECK(s.dimension() == dim);
  CHECK(is_ideal(g, s));
  CHECK(is_abelian_subspace(g, s));
}

}  // namespace

TEST_CASE("codim 1: r2") {
  const LieAlgebra g = family("r2");
  const Construction c = codim1_ideal(g, span_of(2, {1}));
  CHECK(c.ideal == span_of(2, {2}));
  CHECK(!c.trace.already_ideal);
  CHECK(c.trace.codimension == 1);
  CHECK(!c.trace.steps.empty());

  const Construction d = codim1_ideal(g, Subspace::span(2, {Vector{1, 1}}));
  CHECK(d.ideal == span_of(2, {2}));
}

TEST_CASE("codim 1: input that already is an ideal") {
  const LieAlgebra g = family("f:5");
  const Construction c = codim1_ideal(g, span_of(5, {2, 3, 4, 5}));
  CHECK(c.trace.already_ideal);
  CHECK(c.ideal == span_of(5, {2, 3, 4, 5}));
}

TEST_CASE("codim 1: rejects bad input") {
  const LieAlgebra g = family("n4");
  CHECK_THROWS_AS(codim1_ideal(g, span_of(4, {1, 2, 4})), PreconditionFailed);  // not abelian
  CHECK_THROWS_AS(codim1_ideal(g, span_of(4, {3, 4})), PreconditionFailed);     // wrong dimension
  CHECK_THROWS_AS(codim1_ideal(g, span_of(3, {1, 3})), PreconditionFailed);     // wrong ambient
}

TEST_CASE("codim 1 after random base changes") {
  std::mt19937_64 rng(5);
  for (const char* spec : {"r2", "n3", "n4", "f:5", "g5_2", "g5_5"}) {
    const LieAlgebra g = family(spec);
    const std::size_t n = g.dimension();
    for (int t = 0; t < 5; ++t) {
      const Matrix m = random_invertible_matrix(n, rng);
      const LieAlgebra h = change_of_basis(g, m);
      const InvariantReport r = compute_invariants(h, DecisionOptions{});
      REQUIRE(r.alpha == n - 1);
      REQUIRE(r.alpha_witness);
      const Construction c = codim1_ideal(h, *r.alpha_witness);
      check_abelian_ideal(h, c.ideal, n - 1);
    }
  }
}

TEST_CASE("codim 2: g5_6") {
  const LieAlgebra g = family("g5_6");
  const Construction c = codim2_ideal_nilpotent(g, span_of(5, {2, 4, 5}));
  check_abelian_ideal(g, c.ideal, 3);
  CHECK(c.ideal == span_of(5, {3, 4, 5}));
  REQUIRE(c.trace.normalizer);
  CHECK(*c.trace.normalizer == span_of(5, {2, 3, 4, 5}));
  CHECK(c.trace.ell == 1u);
  CHECK(c.trace.bracket_nonzero);
  CHECK(c.trace.bracket_central);
  CHECK(c.trace.normalizer_two_step);
}

TEST_CASE("codim 2: input that already is an ideal") {
  const LieAlgebra g = family("g5_6");
  const Construction c = codim2_ideal_nilpotent(g, span_of(5, {3, 4, 5}));
  CHECK(c.trace.already_ideal);
}

TEST_CASE("codim 2: preconditions") {
  CHECK_THROWS_AS(codim2_ideal_nilpotent(family("sl2_plus_abelian:1"), span_of(4, {1, 4})), PreconditionFailed);
  // [e1, e4] = e5.
  CHECK_THROWS_AS(codim2_ideal_nilpotent(family("f:5"), span_of(5, {1, 4, 5})), PreconditionFailed);
}

TEST_CASE("codim 2 after random base changes") {
  std::mt19937_64 rng(8);
  for (const char* spec : {"g5_1", "g5_3", "g5_4", "g5_6", "cnla7"}) {
    const LieAlgebra g = family(spec);
    const std::size_t n = g.dimension();
    for (int t = 0; t < 3; ++t) {
      const LieAlgebra h = change_of_basis(g, random_invertible_matrix(n, rng));
      const InvariantReport r = compute_invariants(h, DecisionOptions{});
      if (r.alpha != n - 2) continue;
      REQUIRE(r.alpha_witness);
      const Construction c = codim2_ideal_nilpotent(h, *r.alpha_witness);
      check_abelian_ideal(h, c.ideal, n - 2);
    }
  }
}
