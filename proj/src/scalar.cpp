#include "lieab/scalar.hpp"

#include <cctype>

#include "lieab/errors.hpp"

namespace lieab {

const char* to_string(Field f) { return f == Field::Q ? "Q" : "QI"; }

Field parse_field(std::string_view s) {
  if (s == "Q") return Field::Q;
  if (s == "QI") return Field::QI;
  throw InvalidScalar("unknown field tag '" + std::string(s) + "'");
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw InvalidScalar("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidScalar("division by zero");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

namespace {

std::string fraction(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses an optionally signed `p/q` or `p` starting at pos; advances pos.
bool parse_rational(std::string_view s, std::size_t& pos, mpq_class& out) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  std::string text(s.substr(start, pos - start));
  if (pos < s.size() && s[pos] == '/') {
    std::size_t den_start = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_start) throw InvalidScalar("missing denominator in '" + std::string(s) + "'");
    std::string den(s.substr(den_start, pos - den_start));
    if (mpz_class(den) == 0) throw InvalidScalar("zero denominator in '" + std::string(s) + "'");
    text += "/" + den;
  }
  if (text[0] == '+') text.erase(0, 1);
  out = mpq_class(text);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  mpq_class re, im;
  auto bad = [&] { return InvalidScalar("malformed scalar '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  // A bare (signed) `i`.
  if (text == "i" || text == "+i") return imaginary_unit();
  if (text == "-i") return -imaginary_unit();
  if (!parse_rational(text, pos, re)) throw bad();
  if (pos == text.size()) return Scalar(re);
  if (text[pos] == 'i' && pos + 1 == text.size()) return Scalar(mpq_class(0), re);
  if (text[pos] != '+' && text[pos] != '-') throw bad();
  // "+r/s" and "-r/s" are read by parse_rational; "+-r/s" is tolerated.
  if (text[pos] == '+') ++pos;
  if (!parse_rational(text, pos, im)) throw bad();
  if (pos + 1 != text.size() || text[pos] != 'i') throw bad();
  return Scalar(re, im);
}

std::string Scalar::to_string() const {
  if (is_real()) return fraction(re_);
  std::string out = fraction(re_);
  out += sgn(im_) < 0 ? "-" : "+";
  out += fraction(abs(im_));
  out += "i";
  return out;
}

Scalar field_op(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Inv: return a.inverse();
    case FieldOp::Neg: return -a;
  }
  return a;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw AmbientMismatch("vector length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  return axpy(out, Scalar(1), b);
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  return axpy(out, Scalar(-1), b);
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = s * v[i];
  return out;
}

Field field_of(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_real()) return Field::QI;
  return Field::Q;
}

}  // namespace lieab
