#pragma once

#include <cstddef>
#include <vector>

#include "lieab/decision.hpp"
#include "lieab/lie_algebra.hpp"
#include "lieab/subspace.hpp"

namespace lieab {

/// Maximal abelian subalgebra dimension of the complex simple algebra of
/// the given Cartan type ('A'..'G') and rank. Throws UnknownType.
std::size_t alpha_simple(char type, std::size_t rank);

/// Least l with l(l+1)/2 >= n.
std::size_t triangular_root_ceiling(std::size_t n);
/// Least l with l(l+3)/2 >= n.
std::size_t solvable_alpha_floor(std::size_t n);

/// A-priori bounds on alpha from the algebra's type (abelian, nilpotent, solvable).
std::vector<BoundRecord> alpha_bounds(const LieAlgebra& g);

/// sl_m in the Chevalley basis: H_1..H_{m-1}, then E_ij (i<j), then E_ji.
LieAlgebra special_linear(std::size_t m);
/// Borel subalgebra of sl_m: H_1..H_{m-1}, then E_ij (i<j) in lexicographic order.
LieAlgebra borel_special_linear(std::size_t m);

struct BorelIdeals {
  std::size_t rank = 0;
  std::vector<Subspace> ideals;  // includes the zero ideal
  bool matches_power_of_two = false;
};

/// Abelian ideals of borel(sl_{rank+1}) spanned by positive root vectors.
/// Supports rank 1..3; throws PreconditionFailed otherwise.
BorelIdeals enumerate_borel_root_ideals(std::size_t rank);

}  // namespace lieab
