#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "lieab/acceptance.hpp"
#include "lieab/closed_forms.hpp"
#include "lieab/corpus.hpp"
#include "lieab/decision.hpp"
#include "lieab/structure.hpp"

using namespace lieab;

namespace {

// Two-step nilpotent algebra: brackets of the first n-m basis vectors land in
// the last m, which are central. Jacobi holds automatically.
LieAlgebra random_two_step(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  LieAlgebra g(n, Field::Q, "random two-step");
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i + m < n; ++i)
    for (std::size_t j = i + 1; j + m < n; ++j) {
      Vector v = zero_vector(n);
      for (std::size_t k = n - m; k < n; ++k)
        if (coin(rng) == 0) v[k] = testing::random_rational(rng, 2);
      g.set_bracket(i, j, v);
    }
  return g;
}

// Largest abelian subalgebra (or ideal) among subspaces whose RREF entries
// lie in {-1, 0, 1}. No polynomial algebra involved.
std::size_t grid_oracle(const LieAlgebra& g, Target target) {
  const std::size_t n = g.dimension();
  const std::vector<Scalar> grid{0, 1, -1};
  for (std::size_t k = n; k > 0; --k) {
    for (const PivotPattern& p : pivot_patterns(n, k)) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = p.pivots[r] + 1; c < n; ++c)
          if (std::find(p.pivots.begin(), p.pivots.end(), c) == p.pivots.end()) free.emplace_back(r, c);
      std::vector<std::size_t> digit(free.size(), 0);
      while (true) {
        std::vector<Vector> rows(k, zero_vector(n));
        for (std::size_t r = 0; r < k; ++r) rows[r][p.pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = grid[digit[f]];
        const Subspace s = Subspace::span(n, rows);
        if (is_abelian_subspace(g, s) && (target == Target::Subalgebra || is_ideal(g, s))) return k;
        std::size_t f = 0;
        while (f < digit.size() && ++digit[f] == grid.size()) digit[f++] = 0;
        if (f == digit.size()) break;
      }
    }
  }
  return 0;
}

DecisionOptions with_policy(ExecutionPolicy p) {
  DecisionOptions o;
  o.policy = p;
  return o;
}

void check_same(const Decision& a, const Decision& b) {
  CHECK(a.verdict == b.verdict);
  CHECK(a.yes_pattern == b.yes_pattern);
  CHECK(a.witness == b.witness);
  CHECK(a.yes == b.yes);
  CHECK(a.no == b.no);
  CHECK(a.undecided == b.undecided);
  CHECK(a.skipped == b.skipped);
  CHECK(a.reductions == b.reductions);
}

}  // namespace

TEST_CASE("property: serial and parallel sweeps agree") {
  const auto serial = with_policy(ExecutionPolicy::Serial), parallel = with_policy(ExecutionPolicy::Parallel);
  for (const char* spec : {"n4", "g5_3", "g5_6", "g3", "g4:1/2", "sl2_plus_abelian:1", "cnla7", "twist4:QI"}) {
    const LieAlgebra g = family(spec);
    for (std::size_t k = 0; k <= g.dimension(); ++k)
      for (Target t : {Target::Subalgebra, Target::Ideal}) {
        INFO(spec << " k=" << k);
        check_same(decide(g, k, t, serial), decide(g, k, t, parallel));
      }
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const LieAlgebra g = random_two_step(rng, 6, 2);
    for (std::size_t k = 2; k <= 5; ++k)
      check_same(decide(g, k, Target::Ideal, serial), decide(g, k, Target::Ideal, parallel));
  }
}

TEST_CASE("property: decisions are monotone in k") {
  DecisionOptions o;
  for (const char* spec : {"g5_4", "g3", "sl2_plus_abelian:2", "filiform_q6", "borel:3"}) {
    const LieAlgebra g = family(spec);
    const bool solvable = classify(g).is_solvable;
    bool seen_no_sub = false, seen_no_ideal = false;
    for (std::size_t k = 0; k <= g.dimension(); ++k) {
      INFO(spec << " k=" << k);
      const Verdict s = decide_abelian_subalgebra(g, k, o).verdict;
      if (seen_no_sub) CHECK(s == Verdict::No);
      seen_no_sub = seen_no_sub || s == Verdict::No;
      // For solvable algebras an abelian ideal contains one of every smaller dimension.
      if (!solvable) continue;
      const Verdict i = decide_abelian_ideal(g, k, o).verdict;
      if (seen_no_ideal) CHECK(i == Verdict::No);
      seen_no_ideal = seen_no_ideal || i == Verdict::No;
    }
  }
}

TEST_CASE("property: grid search never beats the engine") {
  DecisionOptions o;
  for (const char* spec : {"n3", "n4", "r2", "g1", "g2", "g3", "sl2", "g5_1", "g5_4", "g5_6", "twist4:Q"}) {
    const LieAlgebra g = family(spec);
    const InvariantReport r = compute_invariants(g, o);
    const std::size_t ga = grid_oracle(g, Target::Subalgebra), gb = grid_oracle(g, Target::Ideal);
    INFO(spec);
    CHECK(ga <= *r.alpha);
    CHECK(gb <= *r.beta);
    // These algebras all have coordinate-friendly witnesses, except the
    // ideal of twist4, which needs sqrt(-1).
    CHECK(ga == *r.alpha);
    if (std::string(spec) != "twist4:Q") CHECK(gb == *r.beta);
  }
}

TEST_CASE("property: random two-step nilpotent algebras") {
  std::mt19937_64 rng(4242);
  DecisionOptions o;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 4 + trial % 3, m = 1 + trial % 2;
    const LieAlgebra g = random_two_step(rng, n, m);
    REQUIRE(!validate(g));
    const InvariantReport r = compute_invariants(g, o);
    REQUIRE(r.alpha);
    REQUIRE(r.beta);
    CHECK(*r.beta == *r.alpha);  // nilpotent
    CHECK(*r.alpha >= m);        // the center [g, g] part
    const Subspace z = center(g);
    REQUIRE(r.alpha_witness);
    REQUIRE(r.beta_witness);
    CHECK(r.beta_witness->contains(z));
    CHECK(centralizer(g, *r.alpha_witness) == *r.alpha_witness);
    for (const BoundRecord& b : alpha_bounds(g)) {
      CHECK(b.lower <= *r.alpha);
      CHECK(*r.alpha <= b.upper);
    }
    if (n <= 5) CHECK(grid_oracle(g, Target::Subalgebra) <= *r.alpha);
  }
}

TEST_CASE("property: alpha and beta are additive on direct sums") {
  DecisionOptions o;
  const std::vector<std::string> pieces{"r2", "n3", "sl2", "g1", "abelian:1"};
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i; j < pieces.size(); ++j) {
      const LieAlgebra a = family(pieces[i]), b = family(pieces[j]);
      if (a.dimension() + b.dimension() > 7) continue;
      const InvariantReport ra = compute_invariants(a, o), rb = compute_invariants(b, o);
      const InvariantReport rs = compute_invariants(direct_sum(a, b), o);
      INFO(pieces[i] << " + " << pieces[j]);
      CHECK(*rs.alpha == *ra.alpha + *rb.alpha);
      CHECK(*rs.beta == *ra.beta + *rb.beta);
    }
}

TEST_CASE("property: invariants do not depend on the basis") {
  std::mt19937_64 rng(7);
  DecisionOptions o;
  for (const char* spec : {"n4", "g5_2", "g5_5", "g3", "g4:2", "sl2", "sl2_plus_abelian:1", "f:6"}) {
    const LieAlgebra g = family(spec);
    const InvariantReport r = compute_invariants(g, o);
    for (int t = 0; t < 3; ++t) {
      const LieAlgebra h = change_of_basis(g, random_invertible_matrix(g.dimension(), rng));
      const InvariantReport s = compute_invariants(h, o);
      INFO(spec);
      CHECK(s.alpha == r.alpha);
      CHECK(s.beta == r.beta);
    }
  }
}
