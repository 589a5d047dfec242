#include "lieab/subspace.hpp"

#include <sstream>

#include "lieab/errors.hpp"

namespace lieab {

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace Subspace::zero(std::size_t n) { return Subspace(n, Matrix(0, n), {}); }

Subspace Subspace::full(std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(n, Matrix::identity(n), piv);
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(n);
  RrefResult red = rref(Matrix::from_rows(n, vectors));
  Matrix basis(red.rank, n);
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = red.reduced(r, c);
  return Subspace(n, std::move(basis), std::move(red.pivots));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient dimension");
  Vector coeffs(dimension());
  Vector residual = v;
  for (std::size_t r = 0; r < dimension(); ++r) {
    coeffs[r] = residual[pivots_[r]];
    if (!coeffs[r].is_zero()) axpy(residual, -coeffs[r], basis_.row(r));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
  for (std::size_t r = 0; r < other.dimension(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  if (dimension() == 0) return full(ambient_);
  return kernel(basis_);
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "span{";
  for (std::size_t r = 0; r < dimension(); ++r) {
    if (r) out << ", ";
    out << vector_to_string(basis_.row(r));
  }
  out << "}";
  return out.str();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw AmbientMismatch("subspaces live in different ambient spaces");
  std::vector<Vector> gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient_dimension(), gens);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw AmbientMismatch("subspaces live in different ambient spaces");
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

std::string vector_to_string(const Vector& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << v[k].to_string() << "*e" << (k + 1);
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace lieab
