#include "lieab/constructive.hpp"

#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

namespace lieab {

namespace {

// Coordinates of w in the basis given by `basis` (assumed to span the space).
Vector coordinates_in(const std::vector<Vector>& basis, const Vector& w) {
  const std::size_t n = w.size();
  auto inv = inverse(Matrix::from_columns(n, basis));
  if (!inv) throw SoundnessViolation("adapted basis is singular");
  return *inv * w;
}

Vector first_outside(std::size_t n, const Subspace& s) {
  for (std::size_t i = 0; i < n; ++i)
    if (!s.contains(unit_vector(n, i))) return unit_vector(n, i);
  throw SoundnessViolation("subspace is the whole space");
}

std::string idx(std::size_t j) { return "e" + std::to_string(j + 1); }

void check_abelian_of_dim(const LieAlgebra& g, const Subspace& a, std::size_t dim) {
  if (a.ambient_dimension() != g.dimension()) throw PreconditionFailed("subspace lives in the wrong ambient space");
  if (a.dimension() != dim)
    throw PreconditionFailed("expected an abelian subalgebra of dimension " + std::to_string(dim) + ", got " +
                             std::to_string(a.dimension()));
  if (!is_abelian_subspace(g, a)) throw PreconditionFailed("subspace is not abelian");
}

void finish(const LieAlgebra& g, Construction& c, std::size_t dim) {
  if (c.ideal.dimension() != dim || !is_abelian_subspace(g, c.ideal) || !is_ideal(g, c.ideal))
    throw MaximalityViolated("constructed subspace is not an abelian ideal of dimension " + std::to_string(dim) +
                             "; the maximality assumption on alpha is false");
  c.trace.ideal = c.ideal;
}

}  // namespace

Construction codim1_ideal(const LieAlgebra& g, const Subspace& a) {
  const std::size_t n = g.dimension();
  if (n == 0) throw PreconditionFailed("zero-dimensional algebra");
  check_abelian_of_dim(g, a, n - 1);
  Construction c;
  c.trace.codimension = 1;
  if (a.contains(derived_algebra(g))) {
    c.trace.already_ideal = true;
    c.trace.steps.push_back("[g,g] is contained in a; a is already an ideal");
    c.ideal = a;
    finish(g, c, n - 1);
    return c;
  }

  std::vector<Vector> basis{first_outside(n, a)};
  for (const auto& b : a.basis_vectors()) basis.push_back(b);
  const Vector& e1 = basis[0];
  c.trace.steps.push_back("e1 = " + vector_to_string(e1));

  std::size_t k = 1;
  while (k < n && a.contains(g.bracket(e1, basis[k]))) ++k;
  if (k == n) throw SoundnessViolation("[e1, a] inside a although [g,g] is not");
  if (k != 1) {
    std::swap(basis[1], basis[k]);
    c.trace.steps.push_back("swap " + idx(1) + " and " + idx(k));
  }

  const Scalar a21 = coordinates_in(basis, g.bracket(e1, basis[1]))[0];
  if (a21.is_zero()) throw MaximalityViolated("[e1, e2] has no e1-component");
  if (!a21.is_one()) {
    basis[1] = (a21.inverse()) * basis[1];
    c.trace.steps.push_back("rescale e2 by 1/(" + a21.to_string() + ")");
  }

  c.trace.alpha.assign(n, Scalar(0));
  std::vector<Vector> gens{g.bracket(e1, basis[1])};
  for (std::size_t j = 1; j < n; ++j) {
    c.trace.alpha[j] = coordinates_in(basis, g.bracket(e1, basis[j]))[0];
    Vector v = c.trace.alpha[j] * basis[1] - basis[j];
    c.trace.v_indices.push_back(j);
    c.trace.v.push_back(v);
    gens.push_back(std::move(v));
  }
  c.trace.basis = basis;
  c.ideal = Subspace::span(n, gens);
  finish(g, c, n - 1);
  return c;
}

Construction codim2_ideal_nilpotent(const LieAlgebra& g, const Subspace& a) {
  const std::size_t n = g.dimension();
  if (n < 2) throw PreconditionFailed("codimension 2 needs dimension at least 2");
  if (!series(g, SeriesKind::LowerCentral).reached_zero) throw PreconditionFailed("algebra is not nilpotent");
  check_abelian_of_dim(g, a, n - 2);
  Construction c;
  c.trace.codimension = 2;

  const Subspace N = normalizer(g, a);
  c.trace.normalizer = N;
  if (N.dimension() == n) {
    c.trace.already_ideal = true;
    c.trace.steps.push_back("normalizer of a is g; a is already an ideal");
    c.ideal = a;
    finish(g, c, n - 2);
    return c;
  }
  if (N.dimension() != n - 1)
    throw MaximalityViolated("normalizer of a has dimension " + std::to_string(N.dimension()) + ", expected " +
                             std::to_string(n - 1));

  std::vector<Vector> basis{first_outside(n, N)};
  for (const auto& b : N.basis_vectors())
    if (!a.contains(b)) {
      basis.push_back(b);
      break;
    }
  for (const auto& b : a.basis_vectors()) basis.push_back(b);
  const Vector& e1 = basis[0];
  c.trace.steps.push_back("e1 = " + vector_to_string(e1) + ", e2 = " + vector_to_string(basis[1]));

  std::size_t k = 2;
  while (k < n && a.contains(g.bracket(e1, basis[k]))) ++k;
  if (k == n) throw SoundnessViolation("[e1, a] inside a although e1 is outside the normalizer");
  if (k != 2) {
    std::swap(basis[2], basis[k]);
    c.trace.steps.push_back("swap " + idx(2) + " and " + idx(k));
  }

  const Scalar a32 = coordinates_in(basis, g.bracket(e1, basis[2]))[1];
  if (a32.is_zero()) throw SoundnessViolation("[e1, e3] has no e2-component");
  if (!a32.is_one()) {
    basis[1] = a32 * basis[1];
    c.trace.steps.push_back("rescale e2 by " + a32.to_string());
  }

  c.trace.alpha.assign(n, Scalar(0));
  for (std::size_t j = 1; j < n; ++j) c.trace.alpha[j] = coordinates_in(basis, g.bracket(e1, basis[j]))[1];
  std::vector<Vector> a1_gens;
  for (std::size_t j = 3; j < n; ++j) {
    Vector v = c.trace.alpha[j] * basis[2] - basis[j];
    c.trace.v_indices.push_back(j);
    c.trace.v.push_back(v);
    a1_gens.push_back(std::move(v));
  }
  c.trace.basis = basis;

  // Structural checks: each one failing means alpha(g) = n-2 was false.
  const Vector b23 = g.bracket(basis[1], basis[2]);
  const Subspace z = center(g);
  c.trace.bracket_nonzero = !is_zero(b23);
  c.trace.bracket_central = z.contains(b23);
  c.trace.normalizer_two_step = z.contains(bracket_span(g, N, N));
  c.trace.normalizer_kills_v = true;
  for (const auto& nb : N.basis_vectors())
    for (const auto& v : c.trace.v)
      if (!is_zero(g.bracket(nb, v))) c.trace.normalizer_kills_v = false;
  if (c.trace.bracket_nonzero) {
    const Vector w = g.bracket(e1, b23);
    std::size_t p = 0;
    while (b23[p].is_zero()) ++p;
    const Scalar lambda = w[p] * b23[p].inverse();
    if (w == lambda * b23) c.trace.lambda = lambda;
  }
  if (!c.trace.bracket_nonzero)
    throw MaximalityViolated("[e2, e3] = 0, so span{e2, e3, v4, ...} is a larger abelian subalgebra");
  if (!c.trace.bracket_central || !c.trace.normalizer_two_step || !c.trace.normalizer_kills_v || !c.trace.lambda)
    throw MaximalityViolated("normalizer structure contradicts alpha = n-2");

  const Subspace a1 = Subspace::span(n, a1_gens);
  Vector prev = basis[1];
  for (std::size_t l = 1; l <= n + 1; ++l) {
    Vector next = g.bracket(e1, prev);
    if (a1.contains(next)) {
      c.trace.ell = l;
      std::vector<Vector> gens{prev};
      for (const auto& v : a1_gens) gens.push_back(v);
      c.ideal = Subspace::span(n, gens);
      c.trace.steps.push_back("l = " + std::to_string(l));
      finish(g, c, n - 2);
      return c;
    }
    prev = std::move(next);
  }
  throw SoundnessViolation("ad(e1) is not nilpotent on e2");
}

}  // namespace lieab
