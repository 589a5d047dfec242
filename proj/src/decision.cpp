#include "lieab/decision.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>

#include "lieab/closed_forms.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

namespace lieab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

const char* to_string(SearchMode m) { return m == SearchMode::Closure ? "closure" : "ground"; }

std::vector<PivotPattern> pivot_patterns(std::size_t n, std::size_t k) {
  std::vector<PivotPattern> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back({n, c});
    // Colex successor: bump the first entry that can move, reset the ones below it.
    std::size_t i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
    if (i == k) break;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = j;
  }
  return out;
}

namespace {

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    int c = grevlex_compare(x[i].monomial, y[i].monomial);
    if (c != 0) return c < 0;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
  }
  return x.size() < y.size();
}

// Appends c * p to `acc`, writing the Gaussian coefficient c = a + b i as a + b t.
void accumulate(std::vector<Term>& acc, const MultiPoly& p, const Scalar& c, const Monomial& t) {
  for (const auto& term : p.terms()) {
    if (sgn(c.re()) != 0) acc.push_back({term.monomial, term.coeff * c.re()});
    if (sgn(c.im()) != 0) acc.push_back({term.monomial * t, term.coeff * c.im()});
  }
}

bool has_nonreal_constants(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (field_of(g.structure(i, j)) == Field::QI) return true;
  return false;
}

std::size_t max_free_variables(std::size_t n, std::size_t k) { return k * (n - k); }

}  // namespace

PatternSystem build_pattern_system(const LieAlgebra& g, const PivotPattern& pattern, Target target) {
  const std::size_t n = g.dimension();
  const std::size_t k = pattern.pivots.size();
  PatternSystem ps;
  ps.pattern = pattern;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pattern.pivots) is_pivot.at(p) = true;

  ps.rows.assign(k, std::vector<RowEntry>(n));
  std::size_t next = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (c == pattern.pivots[a])
        ps.rows[a][c].kind = RowEntry::Kind::One;
      else if (c > pattern.pivots[a] && !is_pivot[c])
        ps.rows[a][c] = {RowEntry::Kind::Variable, next++};
    }
  ps.free_variables = next;
  const std::size_t nv = next + 1;
  if (nv > kMaxVariables) throw PreconditionFailed("pivot pattern has too many free entries");
  ps.system.num_variables = nv;
  for (std::size_t v = 0; v < next; ++v) ps.system.names.push_back("x" + std::to_string(v + 1));
  ps.system.names.push_back("t");
  const Monomial t = Monomial::variable(ps.t_index());

  std::vector<std::vector<MultiPoly>> rp(k, std::vector<MultiPoly>(n, MultiPoly(nv)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const RowEntry& e = ps.rows[a][c];
      if (e.kind == RowEntry::Kind::One) rp[a][c] = MultiPoly::constant(nv, 1);
      if (e.kind == RowEntry::Kind::Variable) rp[a][c] = MultiPoly::variable(nv, e.variable);
    }

  // Abelian: [row_a, row_b] = 0 for a < b.
  std::vector<MultiPoly> eqs;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<std::vector<Term>> acc(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rp[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || rp[b][j].is_zero()) continue;
          const Vector& cij = g.structure(i, j);
          if (is_zero(cij)) continue;
          MultiPoly prod = rp[a][i] * rp[b][j];
          for (std::size_t m = 0; m < n; ++m)
            if (!cij[m].is_zero()) accumulate(acc[m], prod, cij[m], t);
        }
      }
      for (std::size_t m = 0; m < n; ++m) eqs.push_back(MultiPoly::from_terms(nv, std::move(acc[m])));
    }
  if (target == Target::Ideal) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        // w = [e_i, row_a], linear in the row's variables.
        std::vector<std::vector<Term>> acc(n);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || rp[a][j].is_zero()) continue;
          const Vector& cij = g.structure(i, j);
          for (std::size_t m = 0; m < n; ++m)
            if (!cij[m].is_zero()) accumulate(acc[m], rp[a][j], cij[m], t);
        }
        std::vector<MultiPoly> w;
        w.reserve(n);
        for (std::size_t m = 0; m < n; ++m) w.push_back(MultiPoly::from_terms(nv, std::move(acc[m])));
        // w lies in the row space iff w - sum_b w[p_b] row_b vanishes off the pivots.
        for (std::size_t c = 0; c < n; ++c) {
          if (is_pivot[c]) continue;
          MultiPoly eq = w[c];
          for (std::size_t b = 0; b < k; ++b) {
            const MultiPoly& coef = w[pattern.pivots[b]];
            if (coef.is_zero() || rp[b][c].is_zero()) continue;
            eq -= coef * rp[b][c];
          }
          eqs.push_back(std::move(eq));
        }
      }
  }

  if (has_nonreal_constants(g)) {
    eqs.push_back(imaginary_unit_relation(nv, ps.t_index()));
    ps.uses_imaginary_unit = true;
  }
  std::vector<MultiPoly> cleaned;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    e.make_monic();
    cleaned.push_back(std::move(e));
  }
  std::sort(cleaned.begin(), cleaned.end(), poly_less);
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  ps.system.polys = std::move(cleaned);
  return ps;
}

DecisionOptions default_decision_options() {
  DecisionOptions opts;
  if (const char* env = std::getenv("LIE_ABELIAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) opts.pattern_budget = v;
  }
  return opts;
}

bool verify_witness(const LieAlgebra& g, const Subspace& s, Target target) {
  if (s.ambient_dimension() != g.dimension()) return false;
  if (!is_abelian_subspace(g, s)) return false;
  return target == Target::Subalgebra || is_ideal(g, s);
}

namespace {

std::vector<mpq_class> rational_grid(int height) {
  std::vector<mpq_class> out{mpq_class(0)};
  for (int q = 1; q <= height; ++q)
    for (int p = 1; p <= height; ++p) {
      mpq_class v(p, q);
      v.canonicalize();
      if (std::find(out.begin(), out.end(), v) != out.end()) continue;
      out.push_back(v);
      out.push_back(-v);
    }
  return out;
}

// Value polynomials of the form a + b t.
bool is_gaussian_constant(const MultiPoly& p, std::size_t t_index) {
  for (const auto& term : p.terms()) {
    const unsigned d = term.monomial.degree();
    if (d == 0) continue;
    if (d == 1 && term.monomial[t_index] == 1) continue;
    return false;
  }
  return true;
}

Scalar gaussian_value(const MultiPoly& p, std::size_t t_index, int t_sign) {
  mpq_class re = 0, im = 0;
  for (const auto& term : p.terms()) {
    if (term.monomial.degree() == 0)
      re += term.coeff;
    else if (term.monomial[t_index] == 1)
      im += term.coeff;
  }
  return Scalar(re, t_sign * im);
}

}  // namespace

std::optional<Subspace> extract_witness(const LieAlgebra& g, const PatternSystem& ps, Target target,
                                        bool allow_gaussian, int height, std::uint64_t budget) {
  const std::size_t nv = ps.system.num_variables;
  const std::size_t nfree = ps.free_variables;
  const std::size_t t = ps.t_index();
  GroebnerOptions gopts;
  gopts.max_reductions = budget;

  std::vector<MultiPoly> base = ps.system.polys;
  bool have_relation = ps.uses_imaginary_unit;
  std::vector<std::optional<MultiPoly>> value(nfree);

  const std::vector<mpq_class> grid = rational_grid(height);
  std::vector<MultiPoly> candidates;
  for (const auto& r : grid) candidates.push_back(MultiPoly::constant(nv, r));
  if (allow_gaussian)
    for (const auto& b : grid) {
      if (sgn(b) == 0) continue;
      for (const auto& a : grid)
        candidates.push_back(MultiPoly::constant(nv, a) + MultiPoly::variable(nv, t) * b);
    }

  auto with_assignments = [&] {
    PolySystem sys{nv, base, {}};
    for (std::size_t v = 0; v < nfree; ++v)
      if (value[v]) sys.polys.push_back(MultiPoly::variable(nv, v) - *value[v]);
    return sys;
  };

  try {
    while (true) {
      GroebnerBasis gb = buchberger(with_assignments(), gopts);
      if (gb.contains_one) return std::nullopt;

      bool progress = false;
      for (const auto& p : gb.basis) {
        const Monomial& lm = p.leading_monomial();
        if (lm.degree() != 1) continue;
        std::size_t v = 0;
        while (v < nfree && lm[v] == 0) ++v;
        if (v >= nfree || value[v]) continue;
        MultiPoly rest = MultiPoly::variable(nv, v) - p;
        if (!is_gaussian_constant(rest, t)) continue;
        if (!allow_gaussian && rest.uses_variable(t)) return std::nullopt;
        value[v] = std::move(rest);
        progress = true;
      }
      if (progress) continue;

      // A univariate element pins its variable to finitely many values; only
      // its roots in Q(i) can lead to a witness.
      std::optional<std::size_t> pinned;
      std::vector<MultiPoly> pinned_values;
      for (const auto& p : gb.basis) {
        for (std::size_t u = 0; u < nfree && !pinned; ++u) {
          if (value[u] || !p.uses_variable(u) || !is_univariate_in(p, u)) continue;
          pinned = u;
          for (const Scalar& r : gaussian_rational_roots(p, u))
            if (allow_gaussian || r.is_real()) pinned_values.push_back(lift_gaussian(r, nv, t));
        }
        if (pinned) break;
      }

      std::size_t v = 0;
      while (v < nfree && value[v]) ++v;
      if (v == nfree) break;
      if (pinned) v = *pinned;

      bool constrained = false;
      for (const auto& p : gb.basis)
        if (p.uses_variable(v)) constrained = true;
      if (!constrained) {
        value[v] = MultiPoly::constant(nv, 0);
        continue;
      }
      bool assigned = false;
      for (const auto& cand : pinned ? pinned_values : candidates) {
        const bool needs_relation = cand.uses_variable(t) && !have_relation;
        PolySystem trial{nv, gb.basis, {}};
        trial.polys.push_back(MultiPoly::variable(nv, v) - cand);
        if (needs_relation) trial.polys.push_back(imaginary_unit_relation(nv, t));
        if (buchberger(trial, gopts).contains_one) continue;
        if (needs_relation) {
          base.push_back(imaginary_unit_relation(nv, t));
          have_relation = true;
        }
        value[v] = cand;
        assigned = true;
        break;
      }
      if (!assigned) return std::nullopt;
    }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }

  const std::size_t n = g.dimension();
  for (int t_sign : {1, -1}) {
    std::vector<Vector> rows;
    for (const auto& row : ps.rows) {
      Vector r(n);
      for (std::size_t c = 0; c < n; ++c) {
        if (row[c].kind == RowEntry::Kind::One) r[c] = 1;
        if (row[c].kind == RowEntry::Kind::Variable) r[c] = gaussian_value(*value[row[c].variable], t, t_sign);
      }
      rows.push_back(std::move(r));
    }
    Subspace s = Subspace::span(n, rows);
    if (s.dimension() == ps.rows.size() && verify_witness(g, s, target)) return s;
    if (!have_relation) break;
  }
  return std::nullopt;
}

namespace {

struct PatternOutcome {
  bool computed = false;
  Verdict verdict = Verdict::Undecided;
  bool refuted = false;  // no solution over the closure
  std::uint64_t reductions = 0;
  std::optional<Subspace> witness;  // ground mode only
};

struct Sweep {
  const LieAlgebra& g;
  std::size_t k;
  Target target;
  const DecisionOptions& opts;
  const std::vector<PivotPattern>& patterns;

  PatternOutcome closure_outcome(const PatternSystem& ps) const {
    PatternOutcome out;
    out.computed = true;
    bool all_zero = true;
    for (const auto& p : ps.system.polys) {
      if (p.is_constant()) {
        out.verdict = Verdict::No;
        out.refuted = true;
        return out;
      }
      all_zero = false;
    }
    if (all_zero) {
      out.verdict = Verdict::Yes;
      return out;
    }
    GroebnerOptions gopts;
    gopts.max_reductions = opts.pattern_budget;
    GroebnerStats stats;
    Consistency c = consistent_over_closure(ps.system, gopts, &stats);
    out.reductions = stats.reductions;
    out.verdict = c == Consistency::Yes ? Verdict::Yes : c == Consistency::No ? Verdict::No : Verdict::Undecided;
    out.refuted = c == Consistency::No;
    return out;
  }

  PatternOutcome evaluate(std::size_t i) const {
    const PatternSystem ps = build_pattern_system(g, patterns[i], target);
    PatternOutcome out = closure_outcome(ps);
    if (opts.mode == SearchMode::Ground) {
      if (out.verdict == Verdict::Yes) {
        out.witness = extract_witness(g, ps, target, g.field() == Field::QI, opts.height, opts.pattern_budget);
        out.verdict = out.witness ? Verdict::Yes : Verdict::Undecided;
      } else {
        out.verdict = Verdict::Undecided;
      }
    }
    return out;
  }

  // Reference implementation: one pattern after another.
  void run_serial(std::vector<PatternOutcome>& outcomes) const {
    std::uint64_t spent = 0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      outcomes[i] = evaluate(i);
      spent += outcomes[i].reductions;
      if (outcomes[i].verdict == Verdict::Yes || spent > opts.total_budget) break;
    }
  }

  // Patterns are independent; a yes at index j cancels every pattern after j.
  void run_parallel(std::vector<PatternOutcome>& outcomes) const {
    const std::size_t count = patterns.size();
    std::atomic<std::size_t> first_yes{count};
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(count); ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (i > first_yes.load(std::memory_order_relaxed)) continue;
      try {
        outcomes[i] = evaluate(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        continue;
      }
      if (outcomes[i].verdict == Verdict::Yes) {
        std::size_t cur = first_yes.load();
        while (i < cur && !first_yes.compare_exchange_weak(cur, i)) {
        }
      }
    }
    if (error) std::rethrow_exception(error);
  }
};

}  // namespace

Decision decide(const LieAlgebra& g, std::size_t k, Target target, const DecisionOptions& options) {
  const std::size_t n = g.dimension();
  if (k > n) throw PreconditionFailed("subspace dimension exceeds the algebra dimension");
  if (max_free_variables(n, k) + 1 > kMaxVariables)
    throw PreconditionFailed("dimension too large for the pivot-pattern engine");
  Decision d;
  d.k = k;
  d.target = target;
  d.mode = options.mode;

  const std::vector<PivotPattern> patterns = pivot_patterns(n, k);
  d.patterns = patterns.size();
  std::vector<PatternOutcome> outcomes(patterns.size());
  Sweep sweep{g, k, target, options, patterns};
  if (options.policy == ExecutionPolicy::Serial)
    sweep.run_serial(outcomes);
  else
    sweep.run_parallel(outcomes);

  // Deterministic merge in pattern order.
  bool budget_out = false;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const PatternOutcome& o = outcomes[i];
    if (budget_out || !o.computed) {
      if (budget_out)
        ++d.undecided;
      else
        ++d.skipped;
      continue;
    }
    d.reductions += o.reductions;
    if (d.reductions > options.total_budget) {
      budget_out = true;
      ++d.undecided;
      continue;
    }
    if (o.verdict == Verdict::Yes) {
      ++d.yes;
      d.yes_pattern = i;
      d.skipped += outcomes.size() - i - 1;
      break;
    }
    if (o.refuted)
      ++d.no;
    else
      ++d.undecided;
  }

  if (d.yes_pattern) {
    d.verdict = Verdict::Yes;
    if (options.mode == SearchMode::Ground) {
      d.witness = outcomes[*d.yes_pattern].witness;
    } else if (options.extract_witness) {
      if (k == 0) {
        d.witness = Subspace::zero(n);
      } else {
        // Witness extraction may fail on the winning pattern; later patterns
        // that are also consistent get a chance. The verdict stands either way.
        for (std::size_t i = *d.yes_pattern; i < patterns.size() && !d.witness; ++i) {
          const PatternSystem ps = build_pattern_system(g, patterns[i], target);
          const PatternOutcome o = i == *d.yes_pattern ? outcomes[i] : sweep.closure_outcome(ps);
          if (o.verdict != Verdict::Yes) continue;
          d.witness = extract_witness(g, ps, target, true, options.height, options.pattern_budget);
        }
      }
    }
  } else if (options.mode == SearchMode::Closure && d.undecided == 0) {
    d.verdict = Verdict::No;
  } else {
    d.verdict = Verdict::Undecided;
  }
  if (d.witness && (d.witness->dimension() != k || !verify_witness(g, *d.witness, target)))
    throw SoundnessViolation("decision engine produced a witness that does not verify");
  return d;
}

Decision decide_abelian_subalgebra(const LieAlgebra& g, std::size_t k, const DecisionOptions& options) {
  return decide(g, k, Target::Subalgebra, options);
}

Decision decide_abelian_ideal(const LieAlgebra& g, std::size_t k, const DecisionOptions& options) {
  return decide(g, k, Target::Ideal, options);
}

namespace {

// Descent shared by alpha and beta. Returns the largest k (<= start) with a
// yes, whether everything above it was refuted, and the largest k that was
// not refuted over the closure.
struct Descent {
  std::optional<std::size_t> exact;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<Subspace> witness;
};

Descent descend(const LieAlgebra& g, std::size_t start, Target target, const DecisionOptions& options,
                std::vector<Decision>& log) {
  Descent out;
  bool clean = true;
  bool upper_set = false;
  for (std::size_t k = start + 1; k-- > 0;) {
    Decision d = decide(g, k, target, options);
    const bool refuted = d.no == d.patterns && d.patterns > 0;
    if (!upper_set && !refuted) {
      out.upper = k;
      upper_set = true;
    }
    const Verdict v = d.verdict;
    std::optional<Subspace> w = d.witness;
    log.push_back(std::move(d));
    if (v == Verdict::Yes) {
      out.lower = k;
      out.witness = std::move(w);
      if (clean) out.exact = k;
      break;
    }
    // Ground mode never answers no, but a k refuted over the closure is
    // refuted over the ground field as well.
    if (v == Verdict::Undecided && !refuted) clean = false;
  }
  return out;
}

}  // namespace

void compute_alpha(const LieAlgebra& g, const DecisionOptions& options, InvariantReport& report) {
  report.algebra = g.name();
  report.dimension = g.dimension();
  report.mode = options.mode;
  report.alpha_log.clear();
  Descent d = descend(g, g.dimension(), Target::Subalgebra, options, report.alpha_log);
  report.alpha = d.exact;
  report.alpha_lower = d.lower;
  report.alpha_witness = std::move(d.witness);
}

void compute_beta(const LieAlgebra& g, const DecisionOptions& options, InvariantReport& report) {
  std::size_t start = g.dimension();
  if (report.alpha) {
    start = *report.alpha;
  } else if (!report.alpha_log.empty()) {
    // Nothing above the largest unrefuted subalgebra dimension can be an ideal.
    for (const auto& d : report.alpha_log)
      if (!(d.no == d.patterns && d.patterns > 0)) {
        start = d.k;
        break;
      }
  }
  report.beta_log.clear();
  Descent d = descend(g, start, Target::Ideal, options, report.beta_log);
  report.beta = d.exact;
  report.beta_lower = d.lower;
  report.beta_upper = d.exact ? *d.exact : d.upper;
  report.beta_witness = std::move(d.witness);
}

InvariantReport compute_invariants(const LieAlgebra& g, const DecisionOptions& options) {
  InvariantReport report;
  report.bounds = alpha_bounds(g);
  compute_alpha(g, options, report);
  compute_beta(g, options, report);

  const std::size_t n = g.dimension();
  if (report.alpha && report.beta && *report.beta > *report.alpha)
    throw SoundnessViolation("beta exceeds alpha");
  if (options.mode == SearchMode::Closure && report.alpha) {
    for (const auto& b : report.bounds)
      if (*report.alpha < b.lower || *report.alpha > b.upper)
        throw SoundnessViolation("alpha violates the bound from " + b.source);
    if (report.beta) {
      if (series(g, SeriesKind::Derived).reached_zero && *report.beta != *report.alpha)
        throw SoundnessViolation("beta differs from alpha for a solvable algebra");
      if (n > 0 && *report.alpha == n - 1 && *report.beta != n - 1)
        throw SoundnessViolation("alpha = n-1 but beta differs");
    }
  }
  return report;
}

}  // namespace lieab
