#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieab/lie_algebra.hpp"

namespace lieab {

/// span{[a, b] : a in A, b in B}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
/// [s, s'] = 0 for all s, s' in S (such a subspace is automatically a subalgebra).
bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// {x : [x, S] = 0}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
Subspace center(const LieAlgebra& g);
/// {x : [x, S] in S}. Throws NotSubalgebra unless S is a subalgebra.
Subspace normalizer(const LieAlgebra& g, const Subspace& s);

enum class SeriesKind { LowerCentral, Derived };

/// C^1 = g, C^{i+1} = [g, C^i]  or  D^0 = g, D^{i+1} = [D^i, D^i].
/// Terms run until the zero space or the first repeat (both included).
struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;
  bool reached_zero = false;

  std::vector<std::size_t> dimensions() const;
};

SeriesReport series(const LieAlgebra& g, SeriesKind kind);

/// kappa(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);

struct KillingRadical {
  Matrix killing;
  Subspace radical;  // Killing-orthogonal complement of [g, g]
};
KillingRadical killing_radical(const LieAlgebra& g);

/// Basis of Der(g), each derivation as an n x n matrix acting on columns.
std::vector<Matrix> derivation_algebra(const LieAlgebra& g);
/// True iff every derivation is nilpotent: the chain V, Der V, Der Der V, ...
/// reaches zero (Engel).
bool acts_nilpotently(const std::vector<Matrix>& maps, std::size_t n);

struct StructureReport {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_filiform = false;
  bool is_semisimple = false;
  bool is_characteristically_nilpotent = false;
  bool is_almost_abelian = false;
  std::size_t nilpotency_class = 0;             // meaningful when nilpotent
  std::size_t solvability_length = 0;           // meaningful when solvable
  std::optional<std::size_t> k_abelian_index;  // least k with C^k abelian, nilpotent only
};

/// Structure flags. is_almost_abelian asks the decision engine whether an
/// abelian subalgebra of codimension 1 exists over the algebraic closure.
StructureReport classify(const LieAlgebra& g);

struct Sl2Detection {
  bool detected = false;
  std::size_t ell = 0;
};

/// g = [g, g] + Z(g) with [g, g] three-dimensional semisimple and Z(g) the
/// radical, i.e. g is sl2 + C^ell.
Sl2Detection detect_sl2_plus_abelian(const LieAlgebra& g);

}  // namespace lieab
