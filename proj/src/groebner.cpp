#include "lieab/groebner.hpp"

#include <algorithm>

#include "lieab/errors.hpp"

namespace lieab {

const char* to_string(Consistency c) {
  switch (c) {
    case Consistency::Yes: return "yes";
    case Consistency::No: return "no";
    case Consistency::Undecided: return "undecided";
  }
  return "?";
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  MultiPoly lhs = MultiPoly(f.num_variables()).minus_scaled(mpq_class(-1) / f.leading_coeff(),
                                                            l / f.leading_monomial(), f);
  return lhs.minus_scaled(mpq_class(1) / g.leading_coeff(), l / g.leading_monomial(), g);
}

namespace {

class Reducer {
 public:
  Reducer(std::uint64_t budget, std::uint64_t& counter) : budget_(budget), counter_(counter) {}

  // Reduces p by the monic polynomials in `basis` (null entries skipped).
  MultiPoly reduce(MultiPoly p, const std::vector<const MultiPoly*>& basis, bool tail) {
    std::vector<Term> done;
    const std::size_t nvars = p.num_variables();
    while (!p.is_zero()) {
      const Term& lead = p.terms().front();
      const MultiPoly* divisor = nullptr;
      for (const MultiPoly* g : basis) {
        if (g && g->leading_monomial().divides(lead.monomial)) {
          divisor = g;
          break;
        }
      }
      if (divisor) {
        if (++counter_ > budget_) throw BudgetExceeded("Groebner reduction budget exhausted");
        p = p.minus_scaled(lead.coeff / divisor->leading_coeff(), lead.monomial / divisor->leading_monomial(),
                           *divisor);
      } else {
        if (!tail) break;
        done.push_back(p.pop_leading());
      }
    }
    if (done.empty()) return p;
    for (const auto& t : p.terms()) done.push_back(t);
    return MultiPoly::from_sorted_terms(nvars, std::move(done));
  }

 private:
  std::uint64_t budget_;
  std::uint64_t& counter_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(std::size_t nvars, std::uint64_t budget, GroebnerStats& stats)
      : nvars_(nvars), stats_(stats), reducer_(budget, stats.reductions) {}

  // Returns false once the unit ideal is detected.
  bool add_input(MultiPoly p) { return insert(reducer_.reduce(std::move(p), active_list(), true)); }

  bool run() {
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        int c = grevlex_compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.j != b.j ? a.j < b.j : a.i < b.i;
      });
      Pair pr = *it;
      pairs_.erase(it);
      ++stats_.pairs_reduced;
      MultiPoly s = s_polynomial(polys_[pr.i], polys_[pr.j]);
      if (!insert(reducer_.reduce(std::move(s), active_list(), true))) return false;
    }
    return true;
  }

  std::vector<MultiPoly> reduced_basis() {
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) g.push_back(polys_[i]);
    std::sort(g.begin(), g.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<const MultiPoly*> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(&g[j]);
      // Leading terms are pairwise non-divisible, so only the tail moves.
      MultiPoly tail = g[i];
      MultiPoly lead = MultiPoly::from_sorted_terms(nvars_, {tail.pop_leading()});
      g[i] = lead + reducer_.reduce(std::move(tail), others, true);
      g[i].make_monic();
    }
    return g;
  }

 private:
  std::vector<const MultiPoly*> active_list() const {
    std::vector<const MultiPoly*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(&polys_[i]);
    return out;
  }

  bool insert(MultiPoly h) {
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    h.make_monic();
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(hi);
    return true;
  }

  // Gebauer-Moeller installation of the new element hi.
  void update(std::size_t hi) {
    const Monomial& lh = polys_[hi].leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, polys_[g].leading_monomial().lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = polys_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (polys_[p.i].leading_monomial().coprime(lh))
        ++stats_.pairs_skipped;  // first criterion
      else
        fresh.push_back(p);
    }
    std::vector<Pair> old;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(polys_[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                  !(polys_[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (drop)
        ++stats_.pairs_skipped;
      else
        old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[hi] = true;
  }

  std::size_t nvars_;
  GroebnerStats& stats_;
  Reducer reducer_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis) {
  std::uint64_t counter = 0;
  Reducer r(UINT64_MAX, counter);
  std::vector<const MultiPoly*> list;
  for (const auto& g : basis)
    if (!g.is_zero()) list.push_back(&g);
  return r.reduce(p, list, true);
}

GroebnerBasis buchberger(const PolySystem& system, const GroebnerOptions& options, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  const std::size_t n = system.num_variables;
  GroebnerBasis out;
  out.num_variables = n;

  std::vector<MultiPoly> input;
  for (const auto& p : system.polys) {
    if (p.num_variables() != n) throw PreconditionFailed("polynomial variable count does not match system");
    if (!p.is_zero()) input.push_back(p);
  }
  std::sort(input.begin(), input.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  Buchberger engine(n, options.max_reductions, st);
  bool proper = true;
  for (auto& p : input) {
    if (!engine.add_input(std::move(p))) {
      proper = false;
      break;
    }
  }
  if (proper) proper = engine.run();
  if (!proper) {
    out.contains_one = true;
    out.basis = {MultiPoly::constant(n, 1)};
    return out;
  }
  out.basis = engine.reduced_basis();
  return out;
}

Consistency consistent_over_closure(const PolySystem& system, const GroebnerOptions& options,
                                    GroebnerStats* stats) {
  try {
    return buchberger(system, options, stats).contains_one ? Consistency::No : Consistency::Yes;
  } catch (const BudgetExceeded&) {
    return Consistency::Undecided;
  }
}

MultiPoly lift_gaussian(const Scalar& s, std::size_t num_variables, std::size_t t_index) {
  MultiPoly p = MultiPoly::constant(num_variables, s.re());
  if (!s.is_real()) p += MultiPoly::variable(num_variables, t_index) * s.im();
  return p;
}

MultiPoly imaginary_unit_relation(std::size_t num_variables, std::size_t t_index) {
  MultiPoly t = MultiPoly::variable(num_variables, t_index);
  return t * t + MultiPoly::constant(num_variables, 1);
}

}  // namespace lieab

namespace lieab {

bool is_univariate_in(const MultiPoly& p, std::size_t var) {
  for (const auto& term : p.terms())
    if (term.monomial.degree() != term.monomial[var]) return false;
  return true;
}

namespace {

using Dense = std::vector<mpq_class>;  // coefficient of v^j at index j

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  const unsigned long long m = n.get_ui();
  for (unsigned long long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.emplace_back(static_cast<unsigned long>(d));
      if (d * d != m) out.emplace_back(static_cast<unsigned long>(m / d));
    }
  return out;
}

mpq_class evaluate(const Dense& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t j = f.size(); j-- > 0;) acc = acc * x + f[j];
  return acc;
}

// f / (v - r), assuming r is a root.
Dense deflate(const Dense& f, const mpq_class& r) {
  Dense q(f.size() - 1);
  mpq_class carry = 0;
  for (std::size_t j = f.size() - 1; j-- > 0;) {
    carry = carry * r + f[j + 1];
    q[j] = carry;
  }
  return q;
}

void trim(Dense& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

}  // namespace

std::vector<Scalar> gaussian_rational_roots(const MultiPoly& p, std::size_t var) {
  if (p.is_zero() || !is_univariate_in(p, var)) return {};
  Dense f(p.total_degree() + 1);
  for (const auto& term : p.terms()) f[term.monomial[var]] = term.coeff;

  std::vector<Scalar> roots;
  if (sgn(f[0]) == 0) {
    roots.emplace_back(0);
    while (f.size() > 1 && sgn(f[0]) == 0) f.erase(f.begin());
  }
  // Integer coefficients for the rational root test.
  mpz_class lcm_den = 1;
  for (const auto& c : f) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class a0 = mpz_class(f.front() * lcm_den);
  const mpz_class an = mpz_class(f.back() * lcm_den);
  if (f.size() > 1) {
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an))
        for (int sign : {1, -1}) {
          mpq_class r(sign * num, den);
          r.canonicalize();
          if (f.size() < 2 || sgn(evaluate(f, r)) != 0) continue;
          if (std::find(roots.begin(), roots.end(), Scalar(r)) != roots.end()) continue;
          roots.emplace_back(r);
          do {
            f = deflate(f, r);
            trim(f);
          } while (f.size() > 1 && sgn(evaluate(f, r)) == 0);
        }
  }
  if (f.size() == 3) {
    // v^2 + b v + c after normalizing; roots -b/2 +- sqrt(b^2/4 - c).
    const mpq_class b = f[1] / f[2], c = f[0] / f[2];
    const mpq_class disc = b * b / 4 - c;
    if (sgn(disc) < 0) {
      const mpq_class neg = -disc;
      mpz_class num, den;
      mpz_sqrtrem(num.get_mpz_t(), den.get_mpz_t(), neg.get_num_mpz_t());
      if (den == 0) {
        mpz_class dsq, drem;
        mpz_sqrtrem(dsq.get_mpz_t(), drem.get_mpz_t(), neg.get_den_mpz_t());
        if (drem == 0) {
          mpq_class s(num, dsq);
          s.canonicalize();
          roots.emplace_back(mpq_class(-b / 2), s);
          roots.emplace_back(mpq_class(-b / 2), mpq_class(-s));
        }
      }
    }
  }
  return roots;
}

}  // namespace lieab
