#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lieab {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with cached total degree. Unused slots stay zero, so
/// monomials over different variable counts compare consistently.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

/// Graded reverse lexicographic comparison: negative, zero or positive as a
/// is smaller than, equal to or greater than b.
int grevlex_compare(const Monomial& a, const Monomial& b);

enum class MonomialOrder { GRevLex };

struct Term {
  Monomial monomial;
  mpq_class coeff;
};

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept in
/// strictly decreasing grevlex order with no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_variables);

  static MultiPoly constant(std::size_t num_variables, const mpq_class& c);
  static MultiPoly variable(std::size_t num_variables, std::size_t index);
  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(std::size_t num_variables, std::vector<Term> terms);
  /// Trusts that `terms` is strictly decreasing with nonzero coefficients.
  static MultiPoly from_sorted_terms(std::size_t num_variables, std::vector<Term> terms);

  std::size_t num_variables() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const;
  /// True if some term has a positive exponent on `index`.
  bool uses_variable(std::size_t index) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const mpq_class& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }

  /// this - c * m * g, in one merge pass.
  MultiPoly minus_scaled(const mpq_class& c, const Monomial& m, const MultiPoly& g) const;
  void make_monic();
  Term pop_leading();

  /// Canonical debug form, e.g. `5/6*x1^2*x3 + -1/1*x2`; "0" for zero.
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

struct PolySystem {
  std::size_t num_variables = 0;
  std::vector<MultiPoly> polys;
  std::vector<std::string> names;  // optional

  std::string to_string() const;
};

}  // namespace lieab
