#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieab/scalar.hpp"

namespace lieab {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  void append_row(const Vector& v);

  /// QI as soon as any entry is non-real.
  Field field() const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form. Pivot = first nonzero entry in column
/// order; arithmetic is exact, so no pivoting strategy is needed.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Nilpotent iff M^n = 0 for an n x n matrix.
bool is_nilpotent_matrix(const Matrix& m);

}  // namespace lieab
