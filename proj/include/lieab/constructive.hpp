#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieab/lie_algebra.hpp"
#include "lieab/subspace.hpp"

namespace lieab {

/// Audit record of one run of the codimension-1 or codimension-2 construction.
/// `basis` is the adapted basis (e1, e2, ...) after relabelling and
/// rescaling; `alpha[j]` is the coefficient of e1 (codim 1) or e2 (codim 2)
/// in [e1, e_j], and `v[j]` the auxiliary vector for j in `v_indices`.
struct ConstructionTrace {
  std::size_t codimension = 1;
  bool already_ideal = false;
  std::vector<std::string> steps;
  std::vector<Vector> basis;
  std::vector<Scalar> alpha;
  std::vector<std::size_t> v_indices;  // 0-based positions in `basis`
  std::vector<Vector> v;
  // Codimension 2 only.
  std::optional<Subspace> normalizer;
  std::optional<std::size_t> ell;
  std::optional<Scalar> lambda;
  bool bracket_nonzero = false;        // [e2, e3] != 0
  bool bracket_central = false;        // [e2, e3] in Z(g)
  bool normalizer_two_step = false;    // [N, N] in Z(g)
  bool normalizer_kills_v = false;     // [N, v_j] = 0
  Subspace ideal;
};

struct Construction {
  Subspace ideal;
  ConstructionTrace trace;
};

/// Abelian ideal of dimension n-1 from an abelian subalgebra `a` of
/// dimension n-1. Throws PreconditionFailed on bad input and
/// MaximalityViolated if the result fails verification.
Construction codim1_ideal(const LieAlgebra& g, const Subspace& a);

/// Abelian ideal of dimension n-2 in a nilpotent algebra with alpha = n-2,
/// from an abelian subalgebra of dimension n-2.
Construction codim2_ideal_nilpotent(const LieAlgebra& g, const Subspace& a);

}  // namespace lieab
