#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lieab/poly.hpp"
#include "lieab/scalar.hpp"

namespace lieab {

struct GroebnerOptions {
  /// Maximum number of single-term reduction steps before BudgetExceeded.
  std::uint64_t max_reductions = 1'000'000;
};

struct GroebnerStats {
  std::uint64_t reductions = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
};

/// Reduced Groebner basis in grevlex order, sorted by increasing leading
/// monomial. `contains_one` iff the basis is {1}.
struct GroebnerBasis {
  std::size_t num_variables = 0;
  std::vector<MultiPoly> basis;
  MonomialOrder order = MonomialOrder::GRevLex;
  bool contains_one = false;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// normal selection strategy. Deterministic for a fixed input. Throws
/// BudgetExceeded rather than return a partial basis.
GroebnerBasis buchberger(const PolySystem& system, const GroebnerOptions& options = {},
                         GroebnerStats* stats = nullptr);

/// Full (top and tail) reduction of p modulo `basis`.
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

enum class Consistency { Yes, No, Undecided };
const char* to_string(Consistency c);

/// Weak Nullstellensatz: the system has a common zero over the algebraic
/// closure of Q iff 1 is not in the ideal it generates.
Consistency consistent_over_closure(const PolySystem& system, const GroebnerOptions& options = {},
                                    GroebnerStats* stats = nullptr);

/// Writes the Gaussian rational a+bi as the polynomial a + b*t, where t is
/// variable `t_index` standing for a root of t^2 + 1.
MultiPoly lift_gaussian(const Scalar& s, std::size_t num_variables, std::size_t t_index);
/// t^2 + 1.
MultiPoly imaginary_unit_relation(std::size_t num_variables, std::size_t t_index);

/// True if every term of p involves only variable `var`.
bool is_univariate_in(const MultiPoly& p, std::size_t var);
/// Distinct roots in Q(i) of a univariate polynomial in `var`: all rational
/// roots, plus the Gaussian pair of a remaining quadratic factor when the
/// cofactor has degree exactly 2. Integer coefficients whose absolute value
/// exceeds 10^12 are not factored and contribute no rational roots.
std::vector<Scalar> gaussian_rational_roots(const MultiPoly& p, std::size_t var);

}  // namespace lieab
