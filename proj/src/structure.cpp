#include "lieab/structure.hpp"

#include "lieab/decision.hpp"
#include "lieab/errors.hpp"

namespace lieab {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av)
    for (const auto& y : bv) {
      Vector z = g.bracket(x, y);
      if (!is_zero(z)) gens.push_back(std::move(z));
    }
  return Subspace::span(g.dimension(), gens);
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<Vector> gens;
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(g.structure(i, j))) gens.push_back(g.structure(i, j));
  return Subspace::span(n, gens);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto v = s.basis_vectors();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!s.contains(g.bracket(v[a], v[b]))) return false;
  return true;
}

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s) {
  const auto v = s.basis_vectors();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!is_zero(g.bracket(v[a], v[b]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  const auto v = s.basis_vectors();
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (const auto& x : v)
      if (!s.contains(g.ad_basis(i) * x)) return false;
  return true;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dimension() != g.dimension()) throw AmbientMismatch("subspace not in the algebra");
  const std::size_t n = g.dimension();
  Matrix rows(0, n);
  for (const auto& x : s.basis_vectors()) {
    Matrix adx = g.ad(x);
    for (std::size_t r = 0; r < n; ++r) rows.append_row(adx.row(r));
  }
  return kernel(rows);
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dimension())); }

Subspace normalizer(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dimension() != g.dimension()) throw AmbientMismatch("subspace not in the algebra");
  if (!is_subalgebra(g, s)) throw NotSubalgebra("normalizer of a subspace that is not a subalgebra");
  const std::size_t n = g.dimension();
  const auto ann = s.annihilator().basis_vectors();
  Matrix rows(0, n);
  for (const auto& x : s.basis_vectors()) {
    Matrix adx = g.ad(x);
    for (const auto& y : ann) {
      // y . [x, z] = 0 as a linear form in z; [z, x] = -[x, z] has the same kernel.
      Vector form(n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
          if (!y[r].is_zero() && !adx(r, c).is_zero()) form[c] += y[r] * adx(r, c);
      rows.append_row(form);
    }
  }
  return kernel(rows);
}

std::vector<std::size_t> SeriesReport::dimensions() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t.dimension());
  return d;
}

SeriesReport series(const LieAlgebra& g, SeriesKind kind) {
  SeriesReport rep;
  rep.kind = kind;
  const Subspace full = Subspace::full(g.dimension());
  rep.terms.push_back(full);
  while (true) {
    const Subspace& last = rep.terms.back();
    if (last.dimension() == 0) {
      rep.reached_zero = true;
      break;
    }
    Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(g, full, last) : bracket_span(g, last, last);
    const bool repeat = next == last;
    rep.terms.push_back(std::move(next));
    if (repeat) break;
  }
  return rep;
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = (g.ad_basis(i) * g.ad_basis(j)).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

KillingRadical killing_radical(const LieAlgebra& g) {
  KillingRadical out;
  const std::size_t n = g.dimension();
  out.killing = killing_form(g);
  const Subspace d = derived_algebra(g);
  if (d.dimension() == 0) {
    out.radical = Subspace::full(n);
    return out;
  }
  Matrix rows(0, n);
  for (const auto& v : d.basis_vectors()) rows.append_row(out.killing * v);
  out.radical = kernel(rows);
  return out;
}

std::vector<Matrix> derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  const std::size_t vars = n * n;  // D(k, l) -> k * n + l
  Matrix system(0, vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& cij = g.structure(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(vars);
        // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], coordinate m.
        for (std::size_t l = 0; l < n; ++l)
          if (!cij[l].is_zero()) row[m * n + l] += cij[l];
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& ckj = g.structure(k, j)[m];
          if (k != j && !ckj.is_zero()) row[k * n + i] -= ckj;
          const Scalar& cik = g.structure(i, k)[m];
          if (k != i && !cik.is_zero()) row[k * n + j] -= cik;
        }
        if (!is_zero(row)) system.append_row(row);
      }
    }
  Subspace der = kernel(system);
  std::vector<Matrix> out;
  for (const auto& v : der.basis_vectors()) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) d(k, l) = v[k * n + l];
    out.push_back(std::move(d));
  }
  return out;
}

bool acts_nilpotently(const std::vector<Matrix>& maps, std::size_t n) {
  Subspace w = Subspace::full(n);
  for (std::size_t step = 0; step <= n; ++step) {
    if (w.dimension() == 0) return true;
    std::vector<Vector> gens;
    for (const auto& d : maps)
      for (const auto& v : w.basis_vectors()) {
        Vector x = d * v;
        if (!is_zero(x)) gens.push_back(std::move(x));
      }
    Subspace next = Subspace::span(n, gens);
    if (next == w) return false;
    w = std::move(next);
  }
  return w.dimension() == 0;
}

StructureReport classify(const LieAlgebra& g) {
  StructureReport rep;
  const std::size_t n = g.dimension();
  rep.is_abelian = g.is_abelian();

  const SeriesReport lower = series(g, SeriesKind::LowerCentral);
  rep.is_nilpotent = lower.reached_zero;
  if (rep.is_nilpotent) {
    // terms = C^1 .. C^{c+1} = 0
    rep.nilpotency_class = lower.terms.size() - 1;
    if (n == 0) rep.nilpotency_class = 0;
    for (std::size_t k = 0; k < lower.terms.size(); ++k)
      if (is_abelian_subspace(g, lower.terms[k])) {
        rep.k_abelian_index = k + 1;
        break;
      }
    if (n >= 3) {
      bool profile = true;
      for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t dim = i - 1 < lower.terms.size() ? lower.terms[i - 1].dimension() : 0;
        if (dim != n - i) profile = false;
      }
      rep.is_filiform = profile;
    }
  }

  const SeriesReport derived = series(g, SeriesKind::Derived);
  rep.is_solvable = derived.reached_zero;
  if (rep.is_solvable) rep.solvability_length = derived.terms.size() - 1;

  if (n > 0) rep.is_semisimple = rank(killing_form(g)) == n;
  if (rep.is_nilpotent && n > 0) rep.is_characteristically_nilpotent = acts_nilpotently(derivation_algebra(g), n);

  if (rep.is_abelian) {
    rep.is_almost_abelian = n > 0;
  } else if (rep.is_solvable && derived.terms.size() == 3) {
    // Only 2-step solvable algebras can carry a codimension-1 abelian ideal.
    DecisionOptions opts;
    opts.extract_witness = false;
    rep.is_almost_abelian = decide_abelian_subalgebra(g, n - 1, opts).verdict == Verdict::Yes;
  }
  return rep;
}

Sl2Detection detect_sl2_plus_abelian(const LieAlgebra& g) {
  Sl2Detection out;
  const std::size_t n = g.dimension();
  const Subspace d = derived_algebra(g);
  if (d.dimension() != 3) return out;
  const Subspace z = center(g);
  if (d.dimension() + z.dimension() != n || intersection(d, z).dimension() != 0) return out;
  const KillingRadical kr = killing_radical(g);
  Matrix basis = d.basis();  // rows
  Matrix restricted = basis * kr.killing * basis.transpose();
  if (rank(restricted) != 3) return out;
  if (!(kr.radical == z)) return out;
  out.detected = true;
  out.ell = z.dimension();
  return out;
}

}  // namespace lieab
