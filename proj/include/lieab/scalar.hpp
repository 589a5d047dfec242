#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieab {

enum class Field { Q, QI };

const char* to_string(Field f);
Field parse_field(std::string_view s);
/// The smallest field containing both.
inline Field join(Field a, Field b) { return (a == Field::QI || b == Field::QI) ? Field::QI : Field::Q; }

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
/// Rationals are the elements with im == 0, so Q coerces into Q(i) for free.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den);
  /// Parses `p/q`, `p`, `p/q+r/si`, `p/q-r/si`, `r/si`, `i`.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Field field() const { return is_real() ? Field::Q : Field::QI; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Throws InvalidScalar on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Canonical token: `p/q` for rationals, `p/q+r/si` (or `p/q-r/si`) otherwise.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

enum class FieldOp { Add, Mul, Inv, Neg };

/// Single entry point for the four field operations; `b` is ignored by the
/// unary ones.
Scalar field_op(const Scalar& a, const Scalar& b, FieldOp op);

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Field field_of(const Vector& v);

}  // namespace lieab
