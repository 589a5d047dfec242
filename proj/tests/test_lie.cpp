#include <doctest.h>

#include "generators.hpp"
#include "lieab/acceptance.hpp"
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

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("Jacobi violation names the first failing triple") {
  LieAlgebra g = family("n4");
  g.set_bracket(1, 2, unit_vector(4, 1));  // [e2,e3] = e2
  const auto v = validate(g);
  REQUIRE(v);
  CHECK(v->i == 1);
  CHECK(v->j == 2);
  CHECK(v->k == 3);
  CHECK_THROWS_AS(require_valid(g), ValidationError);
}

TEST_CASE("bracket and field guards") {
  LieAlgebra g(2, Field::Q);
  CHECK_THROWS_AS(g.set_bracket(0, 1, Vector{Scalar::imaginary_unit(), 0}), FieldMismatch);
  CHECK_THROWS_AS(g.set_bracket(0, 0, Vector{1, 0}), AmbientMismatch);
  g.set_bracket(0, 1, Vector{0, 1});
  CHECK(g.structure(1, 0) == Vector{0, -1});
  CHECK_THROWS_AS(direct_sum(g, family("twist4:QI")), FieldMismatch);
  CHECK_THROWS_AS(change_of_basis(g, Matrix::from_rows(2, {{1, 1}, {1, 1}})), SingularTransform);
}

TEST_CASE("ad is a Lie algebra homomorphism on every corpus algebra") {
  std::mt19937_64 rng(3);
  for (const auto& spec : acceptance_corpus()) {
    const LieAlgebra g = family(spec);
    CHECK_MESSAGE(!validate(g), spec);
    const std::size_t n = g.dimension();
    for (int t = 0; t < 3; ++t) {
      const Vector x = testing::random_vector(rng, n), y = testing::random_vector(rng, n);
      CHECK(g.ad(g.bracket(x, y)) == commutator(g.ad(x), g.ad(y)));
    }
  }
}

TEST_CASE("normalizer examples") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const LieAlgebra f = standard_filiform(n);
    CHECK(normalizer(f, span_of(n, {1, n})) == span_of(n, {1, n - 1, n}));
  }
  const LieAlgebra g = family("g5_6");
  CHECK(normalizer(g, span_of(5, {2, 4, 5})) == span_of(5, {2, 3, 4, 5}));
  CHECK_THROWS_AS(normalizer(family("n3"), span_of(3, {1, 2})), NotSubalgebra);
}

TEST_CASE("centralizer and center") {
  const LieAlgebra h = family("n3");
  CHECK(center(h) == span_of(3, {3}));
  CHECK(centralizer(h, span_of(3, {1})) == span_of(3, {1, 3}));
  CHECK(center(family("sl2")).dimension() == 0);
  CHECK(center(family("g2")) == span_of(4, {4}));
}

TEST_CASE("series of the standard filiform algebra") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const LieAlgebra f = standard_filiform(n);
    std::vector<std::size_t> lower{n};
    for (std::size_t d = n - 2; d > 0; --d) lower.push_back(d);
    lower.push_back(0);
    CHECK(series(f, SeriesKind::LowerCentral).dimensions() == lower);
    CHECK(series(f, SeriesKind::Derived).dimensions() == std::vector<std::size_t>{n, n - 2, 0});
  }
  const auto sl2 = series(family("sl2"), SeriesKind::Derived);
  CHECK(!sl2.reached_zero);
  CHECK(sl2.dimensions() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("Killing form and radical") {
  CHECK(rank(killing_form(family("sl2"))) == 3);
  CHECK(killing_radical(family("sl2")).radical.dimension() == 0);
  CHECK(killing_radical(family("g2")).radical == span_of(4, {4}));
  CHECK(killing_radical(family("r2")).radical.dimension() == 2);
}

TEST_CASE("derivation algebra dimensions") {
  CHECK(derivation_algebra(abelian_algebra(3)).size() == 9);
  CHECK(derivation_algebra(family("n3")).size() == 6);
  CHECK(derivation_algebra(family("sl2")).size() == 3);
  CHECK(derivation_algebra(family("r2")).size() == 2);
  // Every returned map satisfies the derivation identity.
  const LieAlgebra g = family("g5_4");
  for (const Matrix& d : derivation_algebra(g))
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const Vector lhs = d * g.structure(i, j);
        const Vector rhs = g.bracket(d * unit_vector(5, i), unit_vector(5, j)) +
                           g.bracket(unit_vector(5, i), d * unit_vector(5, j));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("structure flags") {
  const StructureReport f5 = classify(family("f:5"));
  CHECK(f5.is_nilpotent);
  CHECK(f5.is_filiform);
  CHECK(f5.k_abelian_index == 2u);
  CHECK(f5.nilpotency_class == 4);
  CHECK(f5.is_almost_abelian);
  CHECK(!f5.is_characteristically_nilpotent);  // the grading is a non-nilpotent derivation

  const StructureReport c7 = classify(family("cnla7"));
  CHECK(c7.is_characteristically_nilpotent);
  CHECK(c7.is_filiform);

  const StructureReport s = classify(family("sl2"));
  CHECK(s.is_semisimple);
  CHECK(!s.is_solvable);
  CHECK(!s.is_almost_abelian);

  const StructureReport a = classify(abelian_algebra(3));
  CHECK(a.is_abelian);
  CHECK(a.is_nilpotent);
  CHECK(a.is_solvable);
  CHECK(a.k_abelian_index == 1u);

  CHECK(classify(family("r2")).is_almost_abelian);
  CHECK(!classify(family("g5_1")).is_almost_abelian);
  CHECK(classify(family("n4")).is_filiform);
  CHECK(classify(family("filiform_q6")).k_abelian_index == 3u);
}

TEST_CASE("sl2 plus abelian detection") {
  const auto d2 = detect_sl2_plus_abelian(family("sl2_plus_abelian:2"));
  CHECK(d2.detected);
  CHECK(d2.ell == 2);
  CHECK(detect_sl2_plus_abelian(family("g2")).detected);
  CHECK(detect_sl2_plus_abelian(family("sl2")).detected);
  CHECK(!detect_sl2_plus_abelian(family("sl:3")).detected);
  CHECK(!detect_sl2_plus_abelian(family("n3")).detected);
  CHECK(!detect_sl2_plus_abelian(family("g3")).detected);
}

TEST_CASE("matrix algebras must be closed") {
  Matrix e(2, 2), f(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  CHECK_THROWS_AS(matrix_lie_algebra({e, f}, Field::Q, "not closed"), ValidationError);
  const LieAlgebra sl3 = family("sl:3");
  CHECK(sl3.dimension() == 8);
  CHECK(!validate(sl3));
}

TEST_CASE("property: change of basis preserves structure") {
  std::mt19937_64 rng(21);
  for (const auto& spec : acceptance_corpus()) {
    const LieAlgebra g = family(spec);
    const std::size_t n = g.dimension();
    const Matrix t = random_invertible_matrix(n, rng);
    const LieAlgebra h = change_of_basis(g, t);
    CHECK_MESSAGE(!validate(h), spec);
    for (auto kind : {SeriesKind::LowerCentral, SeriesKind::Derived})
      CHECK(series(g, kind).dimensions() == series(h, kind).dimensions());
    CHECK(center(g).dimension() == center(h).dimension());
    CHECK(rank(killing_form(g)) == rank(killing_form(h)));
    // Ideals map to ideals.
    const Subspace d = derived_algebra(g);
    CHECK(is_ideal(h, transform_subspace(d, t)));
    CHECK(transform_subspace(d, t) == derived_algebra(h));
  }
}
