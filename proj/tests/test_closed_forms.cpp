#include <doctest.h>

#include <algorithm>

#include "lieab/closed_forms.hpp"
#include "lieab/corpus.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

using namespace lieab;

namespace {

// Block-matrix constructions: p x q blocks in sl(p+q), symmetric blocks in sp(2n).
std::size_t alpha_type_a_oracle(std::size_t n) {
  std::size_t best = 0;
  for (std::size_t p = 0; p <= n + 1; ++p) best = std::max(best, p * (n + 1 - p));
  return best;
}

std::size_t least_l(std::size_t n, std::size_t shift) {
  std::size_t l = 0;
  while (l * (l + shift) / 2 < n) ++l;
  return l;
}

}  // namespace

TEST_CASE("alpha of simple algebras") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(alpha_simple('A', n) == alpha_type_a_oracle(n));
  for (std::size_t n = 2; n <= 10; ++n) CHECK(alpha_simple('C', n) == n * (n + 1) / 2);
  CHECK(alpha_simple('B', 3) == 5);
  CHECK(alpha_simple('B', 4) == 7);
  CHECK(alpha_simple('D', 4) == 6);
  CHECK(alpha_simple('D', 5) == 10);
  CHECK(alpha_simple('G', 2) == 3);
  CHECK(alpha_simple('F', 4) == 9);
  CHECK(alpha_simple('E', 6) == 16);
  CHECK(alpha_simple('E', 7) == 27);
  CHECK(alpha_simple('E', 8) == 36);
  CHECK_THROWS_AS(alpha_simple('E', 5), UnknownType);
  CHECK_THROWS_AS(alpha_simple('D', 3), UnknownType);
  CHECK_THROWS_AS(alpha_simple('X', 2), UnknownType);
  CHECK_THROWS_AS(alpha_simple('A', 0), UnknownType);
}

TEST_CASE("type A formula agrees with the engine on sl2 and sl3") {
  DecisionOptions o;
  CHECK(compute_invariants(special_linear(2), o).alpha == alpha_simple('A', 1));
  InvariantReport r;
  compute_alpha(special_linear(3), o, r);
  CHECK(r.alpha == alpha_simple('A', 2));
}

TEST_CASE("bound helpers match a linear scan") {
  for (std::size_t n = 0; n <= 200; ++n) {
    CHECK(triangular_root_ceiling(n) == least_l(n, 1));
    CHECK(solvable_alpha_floor(n) == least_l(n, 3));
  }
}

TEST_CASE("bound records") {
  const auto a = alpha_bounds(abelian_algebra(4));
  REQUIRE(a.size() == 1);
  CHECK(a[0].lower == 4);
  CHECK(a[0].upper == 4);
  const auto f = alpha_bounds(family("f:7"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].lower == 4);
  CHECK(f[0].upper == 6);
  const auto s = alpha_bounds(family("g3"));
  REQUIRE(s.size() == 1);
  CHECK(s[0].lower == 2);
  CHECK(alpha_bounds(family("sl2")).empty());
}

TEST_CASE("matrix models") {
  for (std::size_t m = 2; m <= 4; ++m) {
    const LieAlgebra s = special_linear(m);
    CHECK(s.dimension() == m * m - 1);
    CHECK(!validate(s));
    CHECK(classify(s).is_semisimple);
    const LieAlgebra b = borel_special_linear(m);
    CHECK(b.dimension() == (m - 1) + m * (m - 1) / 2);
    CHECK(classify(b).is_solvable);
    CHECK(!classify(b).is_nilpotent);
  }
  CHECK_THROWS_AS(special_linear(5), PreconditionFailed);
}

TEST_CASE("abelian root ideals of Borel subalgebras") {
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    const BorelIdeals b = enumerate_borel_root_ideals(rank);
    CHECK(b.ideals.size() == (std::size_t{1} << rank));
    CHECK(b.matches_power_of_two);
    const LieAlgebra g = borel_special_linear(rank + 1);
    for (const Subspace& s : b.ideals) {
      CHECK(is_ideal(g, s));
      CHECK(is_abelian_subspace(g, s));
    }
  }
  CHECK_THROWS_AS(enumerate_borel_root_ideals(4), PreconditionFailed);
}
