#include <doctest.h>

#include "generators.hpp"
#include "lieab/errors.hpp"
#include "lieab/groebner.hpp"

using namespace lieab;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly cst(std::size_t n, long c) { return MultiPoly::constant(n, c); }

// Every S-polynomial reduces to zero: the defining property of a Groebner basis.
bool is_groebner(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (gb.basis[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.basis[j].terms())
        if (gb.basis[i].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("grevlex order") {
  const Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  CHECK(grevlex_compare(x * x, y) > 0);         // degree first
  CHECK(grevlex_compare(x * y, y * y) > 0);     // x > y
  CHECK(grevlex_compare(x * z, y * y) < 0);     // more z is smaller
  CHECK(grevlex_compare(x * y * z, x * y * z) == 0);
}

TEST_CASE("polynomial printing and arithmetic") {
  const std::size_t n = 3;
  MultiPoly p = var(n, 0) * var(n, 0) * var(n, 2) * mpq_class(5, 6) - var(n, 1);
  const std::vector<std::string> names{"x1", "x2", "x3"};
  CHECK(p.to_string(names) == "5/6*x1^2*x3 + -1/1*x2");
  CHECK(MultiPoly(n).to_string() == "0");
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 3);
  CHECK(p.uses_variable(1));
  CHECK(p.uses_variable(2));
  CHECK(!var(n, 0).uses_variable(1));
}

TEST_CASE("Groebner basis examples") {
  SUBCASE("single variable") {
    PolySystem s{1, {var(1, 0)}, {}};
    const auto gb = buchberger(s);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == var(1, 0));
    CHECK(!gb.contains_one);
  }
  SUBCASE("xy - 1 and x^2 generate the unit ideal") {
    PolySystem s{2, {var(2, 0) * var(2, 1) - cst(2, 1), var(2, 0) * var(2, 0)}, {}};
    CHECK(buchberger(s).contains_one);
    CHECK(consistent_over_closure(s) == Consistency::No);
  }
  SUBCASE("a^2 + b^2 has complex zeros") {
    PolySystem s{2, {var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1)}, {}};
    CHECK(consistent_over_closure(s) == Consistency::Yes);
  }
  SUBCASE("t^2 + 1 together with t = 0 is inconsistent") {
    PolySystem s{1, {imaginary_unit_relation(1, 0), var(1, 0)}, {}};
    CHECK(consistent_over_closure(s) == Consistency::No);
  }
  SUBCASE("twisted cubic") {
    // y - x^2, z - x^3 has a three-element reduced grevlex basis.
    const std::size_t n = 3;
    PolySystem s{n, {var(n, 1) - var(n, 0) * var(n, 0), var(n, 2) - var(n, 0) * var(n, 0) * var(n, 0)}, {}};
    const auto gb = buchberger(s);
    CHECK(gb.basis.size() == 3);
    CHECK(is_groebner(gb));
    CHECK(is_reduced(gb));
  }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  const std::size_t n = 3;
  PolySystem s{n, {var(n, 1) - var(n, 0) * var(n, 0), var(n, 2) - var(n, 0) * var(n, 0) * var(n, 0)}, {}};
  GroebnerOptions tiny;
  tiny.max_reductions = 1;
  CHECK_THROWS_AS(buchberger(s, tiny), BudgetExceeded);
  CHECK(consistent_over_closure(s, tiny) == Consistency::Undecided);
}

TEST_CASE("Gaussian lift") {
  const MultiPoly p = lift_gaussian(Scalar(mpq_class(2), mpq_class(-3)), 2, 1);
  CHECK(p == cst(2, 2) - var(2, 1) * mpq_class(3));
}

TEST_CASE("roots in Q(i) of univariate polynomials") {
  const std::size_t n = 2;
  const MultiPoly x = var(n, 0);
  auto has = [](const std::vector<Scalar>& roots, const Scalar& r) {
    return std::find(roots.begin(), roots.end(), r) != roots.end();
  };
  // (x - 3/2)^2
  auto r = gaussian_rational_roots(x * x - x * mpq_class(3) + MultiPoly::constant(n, mpq_class(9, 4)), 0);
  CHECK(r.size() == 1);
  CHECK(has(r, Scalar::rational(3, 2)));
  // x (x^2 + 4) has roots 0 and +-2i
  r = gaussian_rational_roots(x * (x * x + cst(n, 4)), 0);
  CHECK(r.size() == 3);
  CHECK(has(r, Scalar(0)));
  CHECK(has(r, Scalar(mpq_class(0), mpq_class(2))));
  // x^2 - 2 has no roots in Q(i)
  CHECK(gaussian_rational_roots(x * x - cst(n, 2), 0).empty());
  CHECK(!is_univariate_in(x * var(n, 1), 0));
}

TEST_CASE("property: buchberger output is a reduced Groebner basis of the input ideal") {
  std::mt19937_64 rng(2024);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    PolySystem s{n, {}, {}};
    for (int k = 0; k < 3; ++k) s.polys.push_back(testing::random_poly(rng, n, 2, 3));
    GroebnerBasis gb;
    try {
      gb = buchberger(s, GroebnerOptions{200'000});
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++nontrivial;
    CHECK(is_groebner(gb));
    CHECK(is_reduced(gb));
    for (const auto& p : s.polys) CHECK(normal_form(p, gb.basis).is_zero());
    // Ideal membership of a combination.
    const MultiPoly comb = s.polys[0] * testing::random_poly(rng, n, 1, 2) + s.polys[1];
    CHECK(normal_form(comb, gb.basis).is_zero());
  }
  CHECK(nontrivial > 40);
}

TEST_CASE("property: a planted rational zero makes the system consistent") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    std::vector<mpq_class> point;
    for (std::size_t i = 0; i < n; ++i) point.push_back(testing::random_rational(rng).re());
    PolySystem s{n, {}, {}};
    for (int k = 0; k < 3; ++k) {
      MultiPoly p = testing::random_poly(rng, n, 2, 4);
      p -= MultiPoly::constant(n, testing::evaluate(p, point));
      if (!p.is_zero()) s.polys.push_back(p);
    }
    CHECK(consistent_over_closure(s, GroebnerOptions{500'000}) != Consistency::No);
    // Adding p + 1 for a member p makes it inconsistent.
    if (!s.polys.empty()) {
      s.polys.push_back(s.polys[0] + MultiPoly::constant(n, 1));
      CHECK(consistent_over_closure(s, GroebnerOptions{500'000}) != Consistency::Yes);
    }
  }
}
