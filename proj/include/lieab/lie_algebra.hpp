#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieab/matrix.hpp"
#include "lieab/subspace.hpp"

namespace lieab {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Indices are 0-based in code, 1-based in
/// every printed form.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, Field field, std::string name = {});

  std::size_t dimension() const { return dim_; }
  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Sets [e_i, e_j] = value (and [e_j, e_i] = -value). Requires i != j.
  /// Non-real coefficients in a Q algebra throw FieldMismatch.
  void set_bracket(std::size_t i, std::size_t j, Vector value);
  /// [e_i, e_j].
  const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x): column j is [x, e_j].
  Matrix ad(const Vector& x) const;
  /// ad(e_i), cached.
  const Matrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  Field field_ = Field::Q;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;
  std::vector<Matrix> ad_basis_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 1-based, i < j < k
  Vector sum;
};

/// Checks the Jacobi identity on every basis triple i < j < k and returns the
/// first violation. Antisymmetry holds by construction.
std::optional<JacobiViolation> validate(const LieAlgebra& g);
/// Throws ValidationError describing the first violation.
void require_valid(const LieAlgebra& g);

LieAlgebra abelian_algebra(std::size_t n, Field field = Field::Q);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants in the basis f_j = sum_i T(i,j) e_i (columns of T).
/// Throws SingularTransform if T is not invertible.
LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& transform);
/// Coordinates of a subspace given in the old basis, expressed in the basis
/// given by the columns of `transform`.
Subspace transform_subspace(const Subspace& s, const Matrix& transform);

/// Lie algebra spanned by linearly independent square matrices, closed under
/// the commutator. Throws ValidationError if the span is not closed.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, Field field, std::string name);

}  // namespace lieab
