#include "lieab/lie_algebra.hpp"

#include "lieab/errors.hpp"

namespace lieab {

LieAlgebra::LieAlgebra(std::size_t dim, Field field, std::string name)
    : dim_(dim), field_(field), name_(std::move(name)), table_(dim * dim, Vector(dim)) {
  labels_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  ad_basis_.assign(dim, Matrix(dim, dim));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw AmbientMismatch("label count does not match dimension");
  labels_ = std::move(labels);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_ || i == j) throw AmbientMismatch("bracket index out of range");
  if (value.size() != dim_) throw AmbientMismatch("bracket value has wrong length");
  if (field_ == Field::Q && field_of(value) == Field::QI)
    throw FieldMismatch("non-real structure constant in an algebra over Q");
  Vector neg = Scalar(-1) * value;
  for (std::size_t k = 0; k < dim_; ++k) {
    ad_basis_[i](k, j) = value[k];
    ad_basis_[j](k, i) = neg[k];
  }
  table_[i * dim_ + j] = std::move(value);
  table_[j * dim_ + i] = std::move(neg);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw AmbientMismatch("bracket operand has wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vector& c = table_[i * dim_ + j];
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c[k].is_zero()) out[k] += f * c[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw AmbientMismatch("ad operand has wrong length");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!ad_basis_[i](r, c).is_zero()) m(r, c) += x[i] * ad_basis_[i](r, c);
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!lieab::is_zero(v)) return false;
  return true;
}

std::optional<JacobiViolation> validate(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        Vector s = g.bracket(ei, g.structure(j, k));
        s = s + g.bracket(ej, g.structure(k, i));
        s = s + g.bracket(ek, g.structure(i, j));
        if (!is_zero(s)) return JacobiViolation{i + 1, j + 1, k + 1, s};
      }
  return std::nullopt;
}

void require_valid(const LieAlgebra& g) {
  if (auto v = validate(g))
    throw ValidationError("Jacobi identity fails for (" + std::to_string(v->i) + "," + std::to_string(v->j) + "," +
                          std::to_string(v->k) + "): sum = " + vector_to_string(v->sum));
}

LieAlgebra abelian_algebra(std::size_t n, Field field) {
  return LieAlgebra(n, field, "abelian(" + std::to_string(n) + ")");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  const std::size_t n = a.dimension(), m = b.dimension();
  LieAlgebra s(n + m, a.field(), a.name() + "+" + b.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& c = a.structure(i, j);
      if (is_zero(c)) continue;
      Vector v(n + m);
      for (std::size_t k = 0; k < n; ++k) v[k] = c[k];
      s.set_bracket(i, j, std::move(v));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector& c = b.structure(i, j);
      if (is_zero(c)) continue;
      Vector v(n + m);
      for (std::size_t k = 0; k < m; ++k) v[n + k] = c[k];
      s.set_bracket(n + i, n + j, std::move(v));
    }
  return s;
}

LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& transform) {
  const std::size_t n = g.dimension();
  if (transform.rows() != n || transform.cols() != n) throw AmbientMismatch("transform has wrong shape");
  auto inv = inverse(transform);
  if (!inv) throw SingularTransform("change of basis matrix is singular");
  Field field = join(g.field(), transform.field());
  LieAlgebra out(n, field, g.name());
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(transform.column(j));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = (*inv) * g.bracket(cols[a], cols[b]);
      if (!is_zero(v)) out.set_bracket(a, b, std::move(v));
    }
  return out;
}

Subspace transform_subspace(const Subspace& s, const Matrix& transform) {
  auto inv = inverse(transform);
  if (!inv) throw SingularTransform("change of basis matrix is singular");
  std::vector<Vector> rows;
  for (const auto& v : s.basis_vectors()) rows.push_back((*inv) * v);
  return Subspace::span(s.ambient_dimension(), rows);
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, Field field, std::string name) {
  const std::size_t n = basis.size();
  if (n == 0) return LieAlgebra(0, field, std::move(name));
  const std::size_t entries = basis[0].rows() * basis[0].cols();
  // Solve for coordinates: columns are the flattened basis matrices.
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  Matrix system = Matrix::from_columns(entries, cols);
  LieAlgebra g(n, field, std::move(name));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      Vector target = flatten(comm);
      Matrix aug(entries, n + 1);
      for (std::size_t r = 0; r < entries; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = system(r, c);
        aug(r, n) = target[r];
      }
      RrefResult red = rref(std::move(aug));
      if (red.rank > 0 && red.pivots[red.rank - 1] == n)
        throw ValidationError("matrix span is not closed under the commutator");
      Vector coords(n);
      for (std::size_t r = 0; r < red.rank; ++r) coords[red.pivots[r]] = red.reduced(r, n);
      if (!is_zero(coords)) g.set_bracket(i, j, std::move(coords));
    }
  return g;
}

}  // namespace lieab
