#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieab/matrix.hpp"

namespace lieab {

class Subspace;

/// Null space {x : m x = 0}.
Subspace kernel(const Matrix& m);

/// Linear subspace of K^n stored as its canonical RREF basis. Two Subspace
/// values are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Field field() const { return basis_.field(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis, nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// {y : sum_i s_i y_i = 0 for all s in this}, using the bilinear pairing.
  Subspace annihilator() const;

  /// Debug text: `span{1/1*e2 + 1/1*e4, ...}`.
  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace kernel(const Matrix& m);
  Subspace(std::size_t n, Matrix reduced_rows, std::vector<std::size_t> pivots)
      : ambient_(n), basis_(std::move(reduced_rows)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

std::string vector_to_string(const Vector& v);

}  // namespace lieab
