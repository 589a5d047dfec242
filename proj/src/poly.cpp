#include "lieab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lieab/errors.hpp"

namespace lieab {

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw PreconditionFailed("too many polynomial variables");
  if (power > 255) throw PreconditionFailed("exponent overflow");
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(d);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 255) throw PreconditionFailed("exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  m.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return m;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

MultiPoly::MultiPoly(std::size_t num_variables) : nvars_(num_variables) {
  if (num_variables > kMaxVariables) throw PreconditionFailed("too many polynomial variables");
}

MultiPoly MultiPoly::constant(std::size_t num_variables, const mpq_class& c) {
  MultiPoly p(num_variables);
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_variables, std::size_t index) {
  if (index >= num_variables) throw PreconditionFailed("variable index out of range");
  MultiPoly p(num_variables);
  p.terms_.push_back({Monomial::variable(index), mpq_class(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t num_variables, std::vector<Term> terms) {
  MultiPoly p(num_variables);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

MultiPoly MultiPoly::from_sorted_terms(std::size_t num_variables, std::vector<Term> terms) {
  MultiPoly p(num_variables);
  p.terms_ = std::move(terms);
  return p;
}

Term MultiPoly::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool MultiPoly::uses_variable(std::size_t index) const {
  for (const auto& t : terms_)
    if (t.monomial[index] != 0) return true;
  return false;
}

namespace {

// Merge a and sign*b (both sorted decreasing).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpq_class s = sign < 0 ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw PreconditionFailed("polynomial variable count mismatch");
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw PreconditionFailed("polynomial variable count mismatch");
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionFailed("polynomial variable count mismatch");
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  return MultiPoly::from_terms(a.nvars_, std::move(terms));
}

MultiPoly MultiPoly::minus_scaled(const mpq_class& c, const Monomial& m, const MultiPoly& g) const {
  MultiPoly out(nvars_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  Monomial mj;
  bool have_mj = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_mj) {
      mj = b[j].monomial * m;
      have_mj = true;
    }
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].monomial, mj);
    if (cmp > 0) {
      out.terms_.push_back(a[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({mj, -c * b[j].coeff});
      ++j;
      have_mj = false;
    } else {
      mpq_class s = a[i].coeff - c * b[j].coeff;
      if (sgn(s) != 0) out.terms_.push_back({mj, std::move(s)});
      ++i;
      ++j;
      have_mj = false;
    }
  }
  return out;
}

void MultiPoly::make_monic() {
  if (terms_.empty() || terms_[0].coeff == 1) return;
  mpq_class inv = 1 / terms_[0].coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    out << t.coeff.get_num().get_str() << "/" << t.coeff.get_den().get_str();
    for (std::size_t v = 0; v < nvars_; ++v) {
      unsigned e = t.monomial[v];
      if (e == 0) continue;
      out << "*";
      if (v < names.size())
        out << names[v];
      else
        out << "x" << (v + 1);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string PolySystem::to_string() const {
  std::ostringstream out;
  for (const auto& p : polys) out << p.to_string(names) << "\n";
  return out.str();
}

}  // namespace lieab
