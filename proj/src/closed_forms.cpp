#include "lieab/closed_forms.hpp"

#include <string>

#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

namespace lieab {

std::size_t alpha_simple(char type, std::size_t n) {
  auto bad = [&] {
    return UnknownType(std::string("no simple Lie algebra of type ") + type + std::to_string(n));
  };
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      return (n + 1) * (n + 1) / 4;
    case 'B':
      if (n < 3) throw bad();
      return n == 3 ? 5 : n * (n - 1) / 2 + 1;
    case 'C':
      if (n < 2) throw bad();
      return n * (n + 1) / 2;
    case 'D':
      if (n < 4) throw bad();
      return n * (n - 1) / 2;
    case 'G':
      if (n != 2) throw bad();
      return 3;
    case 'F':
      if (n != 4) throw bad();
      return 9;
    case 'E':
      if (n == 6) return 16;
      if (n == 7) return 27;
      if (n == 8) return 36;
      throw bad();
    default:
      throw bad();
  }
}

std::size_t triangular_root_ceiling(std::size_t n) {
  std::size_t l = 0;
  while (l * (l + 1) / 2 < n) ++l;
  return l;
}

std::size_t solvable_alpha_floor(std::size_t n) {
  std::size_t l = 0;
  while (l * (l + 3) / 2 < n) ++l;
  return l;
}

std::vector<BoundRecord> alpha_bounds(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  std::vector<BoundRecord> out;
  if (g.is_abelian()) {
    out.push_back({"alpha", n, n, "abelian"});
    return out;
  }
  if (series(g, SeriesKind::LowerCentral).reached_zero)
    out.push_back({"alpha", triangular_root_ceiling(n), n - 1, "nilpotent"});
  else if (series(g, SeriesKind::Derived).reached_zero)
    out.push_back({"alpha", solvable_alpha_floor(n), n - 1, "solvable"});
  return out;
}

namespace {

Matrix unit_matrix(std::size_t m, std::size_t i, std::size_t j) {
  Matrix e(m, m);
  e(i, j) = 1;
  return e;
}

std::vector<Matrix> cartan_basis(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i + 1 < m; ++i) out.push_back(unit_matrix(m, i, i) - unit_matrix(m, i + 1, i + 1));
  return out;
}

std::vector<Matrix> positive_root_vectors(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.push_back(unit_matrix(m, i, j));
  return out;
}

void require_rank(std::size_t m) {
  if (m < 2 || m > 4) throw PreconditionFailed("sl_m is supported for 2 <= m <= 4");
}

}  // namespace

LieAlgebra special_linear(std::size_t m) {
  require_rank(m);
  std::vector<Matrix> basis = cartan_basis(m);
  for (auto& e : positive_root_vectors(m)) basis.push_back(e);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) basis.push_back(unit_matrix(m, j, i));
  return matrix_lie_algebra(basis, Field::Q, "sl" + std::to_string(m));
}

LieAlgebra borel_special_linear(std::size_t m) {
  require_rank(m);
  std::vector<Matrix> basis = cartan_basis(m);
  for (auto& e : positive_root_vectors(m)) basis.push_back(e);
  return matrix_lie_algebra(basis, Field::Q, "borel" + std::to_string(m));
}

BorelIdeals enumerate_borel_root_ideals(std::size_t rank) {
  if (rank < 1 || rank > 3) throw PreconditionFailed("Borel enumeration supports rank 1..3");
  const LieAlgebra b = borel_special_linear(rank + 1);
  const std::size_t n = b.dimension();
  const std::size_t roots = n - rank;
  BorelIdeals out;
  out.rank = rank;
  for (std::size_t mask = 0; mask < (std::size_t{1} << roots); ++mask) {
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < roots; ++r)
      if (mask >> r & 1) gens.push_back(unit_vector(n, rank + r));
    Subspace s = Subspace::span(n, gens);
    if (is_abelian_subspace(b, s) && is_ideal(b, s)) out.ideals.push_back(std::move(s));
  }
  out.matches_power_of_two = out.ideals.size() == (std::size_t{1} << rank);
  return out;
}

}  // namespace lieab
