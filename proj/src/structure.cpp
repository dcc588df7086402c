#include "oexp/structure.hpp"

#include <functional>

#include "oexp/error.hpp"

namespace oexp {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = GR(1);
  return v;
}

// det via fraction-free-ish Gaussian elimination (rank check is enough: the
// determinant is nonzero iff rref has full rank).
bool is_nonsingular(const Matrix& m) {
  if (!m.is_square()) throw InternalError("nonsingular test on non-square matrix");
  return rref(m).rank == m.rows();
}

bool chain_reaches_zero(const SeriesChain& chain) {
  return chain.stable_term().dim() == 0;
}

}  // namespace

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_matrix(unit(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      GR t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

ClassifyFlags classify(const LieAlgebra& g) {
  ClassifyFlags f;
  f.is_abelian = g.is_abelian();
  Subspace full = g.full_space();
  f.is_nilpotent = chain_reaches_zero(series(g, full, SeriesKind::lower_central));
  f.is_solvable = f.is_nilpotent || chain_reaches_zero(series(g, full, SeriesKind::derived));
  f.is_semisimple = is_nonsingular(killing_form(g));
  if (f.is_semisimple) {
    f.is_reductive = true;
  } else {
    Subspace z = g.center();
    Subspace d = g.bracket_span(full, full);
    bool direct = subspace_intersect(z, d).dim() == 0 &&
                  subspace_sum(z, d).dim() == g.dim();
    if (direct) {
      LieAlgebra dd = restrict_to(g, d);
      f.is_reductive = is_nonsingular(killing_form(dd));
    }
  }
  return f;
}

Subspace radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace derived = g.bracket_span(g.full_space(), g.full_space());
  Matrix kappa = killing_form(g);
  // x is in the radical iff kappa(x, d) = 0 for every d in [g, g].
  Matrix conditions(derived.dim(), n);
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    Vec d = derived.basis_vector(r);
    for (std::size_t c = 0; c < n; ++c) {
      GR s;
      for (std::size_t k = 0; k < n; ++k)
        if (!d[k].is_zero()) s += kappa.at(c, k) * d[k];
      conditions.at(r, c) = s;
    }
  }
  Subspace rad = kernel(conditions);

  if (!g.is_ideal(rad)) throw InternalError("radical: result is not an ideal");
  if (rad.dim() > 0) {
    LieAlgebra r = restrict_to(g, rad);
    if (!chain_reaches_zero(series(r, r.full_space(), SeriesKind::derived)))
      throw InternalError("radical: result is not solvable");
  }
  if (rad.dim() < n) {
    QuotientResult q = quotient(g, rad);
    if (!is_nonsingular(killing_form(q.algebra)))
      throw InternalError("radical: quotient is not semisimple");
  }
  return rad;
}

namespace {

// Lifts a Levi subalgebra recursively: quotient by the last nonzero term of
// the radical's derived series (an abelian ideal), solve the linear system
// restoring the bracket relations, repeat.
Subspace levi_lift(const LieAlgebra& g, const Subspace& rad) {
  const std::size_t n = g.dim();
  if (rad.dim() == 0) return g.full_space();
  if (rad.dim() == n) return Subspace(n);

  LieAlgebra r_alg = restrict_to(g, rad);
  SeriesChain der = series(r_alg, r_alg.full_space(), SeriesKind::derived);
  // Last nonzero term; the derived series of a solvable algebra ends at zero.
  Subspace abelian_in_r = der.terms[der.terms.size() - 2];
  // Pull back to ambient coordinates.
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < abelian_in_r.dim(); ++k) {
    Vec coords = abelian_in_r.basis_vector(k);
    Vec ambient(n);
    for (std::size_t a = 0; a < rad.dim(); ++a)
      if (!coords[a].is_zero())
        for (std::size_t c = 0; c < n; ++c)
          ambient[c] += coords[a] * rad.basis().at(a, c);
    rows.push_back(std::move(ambient));
  }
  Subspace nil = Subspace::span_vectors(rows, n);

  QuotientResult q = quotient(g, nil);
  // Radical of the quotient = image of the radical.
  std::vector<Vec> prows;
  for (std::size_t k = 0; k < rad.dim(); ++k)
    prows.push_back(q.projection.apply(rad.basis_vector(k)));
  Subspace rad_q = Subspace::span_vectors(prows, q.algebra.dim());
  Subspace levi_q = levi_lift(q.algebra, rad_q);

  const std::size_t m = levi_q.dim();
  if (m == 0) return Subspace(n);
  // Representatives in g of the quotient Levi basis: quotient coordinates are
  // taken in the canonical complement, so the complement basis lifts them.
  std::vector<Vec> reps;
  for (std::size_t k = 0; k < m; ++k) {
    Vec qc = levi_q.basis_vector(k);
    Vec ambient(n);
    for (std::size_t a = 0; a < q.complement.dim(); ++a)
      if (!qc[a].is_zero())
        for (std::size_t c = 0; c < n; ++c)
          ambient[c] += qc[a] * q.complement.basis().at(a, c);
    reps.push_back(std::move(ambient));
  }
  // Structure constants of the quotient Levi in its own basis.
  std::vector<std::vector<Vec>> cc(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec br = q.algebra.bracket(levi_q.basis_vector(a), levi_q.basis_vector(b));
      auto co = levi_q.coordinates_of(br);
      if (!co) throw InternalError("levi: quotient Levi is not a subalgebra");
      cc[a][b] = std::move(*co);
    }

  // Unknowns: corrections v_a in the abelian ideal (coordinates in nil's
  // basis), one per Levi generator. For a < b the relation
  //   [x_a + v_a, x_b + v_b] = sum_k c_ab^k (x_k + v_k)
  // is linear in the v's because [nil, nil] = 0:
  //   [x_a, v_b] - [x_b, v_a] - sum_k c_ab^k v_k = d_ab,
  // with defect d_ab = sum_k c_ab^k x_k - [x_a, x_b]  (a vector in nil).
  const std::size_t p = nil.dim();
  const std::size_t unknowns = m * p;
  std::vector<Vec> eq_rows;
  Vec rhs_all;
  std::vector<GR> rhs_list;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec defect(n);
      for (std::size_t k = 0; k < m; ++k)
        if (!cc[a][b][k].is_zero())
          for (std::size_t c = 0; c < n; ++c) defect[c] += cc[a][b][k] * reps[k][c];
      Vec br = g.bracket(reps[a], reps[b]);
      for (std::size_t c = 0; c < n; ++c) defect[c] -= br[c];
      auto dc = nil.coordinates_of(defect);
      if (!dc)
        throw InternalError("levi: bracket defect left the abelian ideal");
      // Row block: coefficients of unknowns v_{k,t} (k generator, t nil coord).
      std::vector<Vec> block(p, Vec(unknowns));
      // [x_a, v_b]: columns of ad(x_a) restricted to nil.
      Matrix ada = g.ad_matrix(reps[a]);
      Matrix adb = g.ad_matrix(reps[b]);
      for (std::size_t t = 0; t < p; ++t) {
        Vec nb = nil.basis_vector(t);
        auto put = [&](std::size_t gen, const Vec& contribution, bool negate) {
          auto co = nil.coordinates_of(contribution);
          if (!co) throw InternalError("levi: ad image left the abelian ideal");
          for (std::size_t s = 0; s < p; ++s) {
            GR val = (*co)[s];
            if (negate) val = -val;
            block[s][gen * p + t] += val;
          }
        };
        put(b, ada.apply(nb), false);   // +[x_a, v_b]
        put(a, adb.apply(nb), true);    // -[x_b, v_a]
      }
      for (std::size_t k = 0; k < m; ++k) {
        const GR& f = cc[a][b][k];
        if (f.is_zero()) continue;
        for (std::size_t t = 0; t < p; ++t) block[t][k * p + t] -= f;
      }
      for (std::size_t s = 0; s < p; ++s) {
        eq_rows.push_back(std::move(block[s]));
        rhs_list.push_back((*dc)[s]);
      }
    }

  Vec solution(unknowns);
  if (!eq_rows.empty()) {
    Matrix A = Matrix::from_rows(eq_rows, unknowns);
    Vec bvec = rhs_list;
    auto x = solve_linear_vec(A, bvec);
    if (!x) throw InternalError("levi: lifting system is inconsistent");
    solution = std::move(*x);
  }

  std::vector<Vec> levi_rows;
  for (std::size_t k = 0; k < m; ++k) {
    Vec v = reps[k];
    for (std::size_t t = 0; t < p; ++t) {
      const GR& f = solution[k * p + t];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += f * nil.basis().at(t, c);
    }
    levi_rows.push_back(std::move(v));
  }
  return Subspace::span_vectors(levi_rows, n);
}

}  // namespace

LeviDecomposition levi_subalgebra(const LieAlgebra& g) {
  Subspace rad = radical(g);
  Subspace levi = levi_lift(g, rad);
  // Post-validation: complement, subalgebra, semisimple.
  if (levi.dim() + rad.dim() != g.dim() ||
      subspace_intersect(levi, rad).dim() != 0)
    throw InternalError("levi: subalgebra does not complement the radical");
  if (!g.is_subalgebra(levi)) throw InternalError("levi: result is not a subalgebra");
  if (levi.dim() > 0) {
    LieAlgebra s = restrict_to(g, levi);
    if (rref(killing_form(s)).rank != s.dim())
      throw InternalError("levi: result is not semisimple");
  }
  return {std::move(rad), std::move(levi)};
}

Subspace normalizer(const LieAlgebra& g, const Subspace& u) {
  // x normalizes u iff for every basis vector b of u, [x, b] stays in u,
  // i.e. the annihilator conditions of u kill [x, b]. Build the linear system
  // in x directly.
  const std::size_t n = g.dim();
  Subspace ann = u.dim() == 0 ? g.full_space() : kernel(u.basis());
  std::vector<Vec> rows;
  for (std::size_t bidx = 0; bidx < u.dim(); ++bidx) {
    Vec b = u.basis_vector(bidx);
    // [x, b] = -ad(b) x; condition a · [x, b] = 0 for annihilator rows a.
    Matrix adb = g.ad_matrix(b);
    for (std::size_t a = 0; a < ann.dim(); ++a) {
      Vec arow = ann.basis_vector(a);
      Vec cond(n);
      for (std::size_t c = 0; c < n; ++c) {
        GR s;
        for (std::size_t r = 0; r < n; ++r)
          if (!arow[r].is_zero() && !adb.at(r, c).is_zero())
            s += arow[r] * adb.at(r, c);
        cond[c] = -s;
      }
      rows.push_back(std::move(cond));
    }
  }
  if (rows.empty()) return g.full_space();
  return kernel(Matrix::from_rows(rows, n));
}

namespace {

// Generalized nullspace of ad(x) inside the subalgebra k: kernel of
// (ad x restricted to k)^dim(k), pulled back to ambient coordinates.
Subspace generalized_nullspace_in(const LieAlgebra& g, const Subspace& k, const Vec& x) {
  const std::size_t m = k.dim();
  Matrix adx = g.ad_matrix(x);
  // Restrict to k: columns are coordinates of [x, k_j] in k's basis.
  Matrix restricted(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto co = k.coordinates_of(adx.apply(k.basis_vector(j)));
    if (!co) throw InternalError("cartan: ad(x) does not preserve the candidate");
    for (std::size_t i = 0; i < m; ++i) restricted.at(i, j) = (*co)[i];
  }
  Matrix power = Matrix::identity(m);
  for (std::size_t t = 0; t < m; ++t) power = power * restricted;
  Subspace null_local = kernel(power);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < null_local.dim(); ++r) {
    Vec coords = null_local.basis_vector(r);
    Vec ambient(g.dim());
    for (std::size_t a = 0; a < m; ++a)
      if (!coords[a].is_zero())
        for (std::size_t c = 0; c < g.dim(); ++c)
          ambient[c] += coords[a] * k.basis().at(a, c);
    rows.push_back(std::move(ambient));
  }
  return Subspace::span_vectors(rows, g.dim());
}

bool restricted_is_nilpotent(const LieAlgebra& g, const Subspace& k) {
  if (k.dim() == 0) return true;
  LieAlgebra r = restrict_to(g, k);
  return series(r, r.full_space(), SeriesKind::lower_central).stable_term().dim() == 0;
}

bool ad_nilpotent_in(const LieAlgebra& g, const Subspace& k, const Vec& x) {
  const std::size_t m = k.dim();
  Matrix adx = g.ad_matrix(x);
  Matrix restricted(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto co = k.coordinates_of(adx.apply(k.basis_vector(j)));
    if (!co) throw InternalError("cartan: ad(x) does not preserve the candidate");
    for (std::size_t i = 0; i < m; ++i) restricted.at(i, j) = (*co)[i];
  }
  return is_nilpotent_matrix(restricted);
}

// Deterministic spiral over small integer coefficient vectors: first single
// basis vectors, then pairs, then triples, with coefficient magnitudes
// growing; calls fn(combination) until it returns true.
bool enumerate_combinations(const LieAlgebra& g, const Subspace& k,
                            const std::function<bool(const Vec&)>& fn) {
  const std::size_t m = k.dim();
  auto vec_of = [&](const std::vector<std::pair<std::size_t, long>>& terms) {
    Vec v(g.dim());
    for (auto& [idx, coef] : terms)
      for (std::size_t c = 0; c < g.dim(); ++c)
        v[c] += GR(coef) * k.basis().at(idx, c);
    return v;
  };
  for (long radius = 1; radius <= 3; ++radius) {
    // support size 1
    for (std::size_t i = 0; i < m; ++i)
      for (long a : {radius, -radius})
        if (fn(vec_of({{i, a}}))) return true;
    // support size 2
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (long a = -radius; a <= radius; ++a)
          for (long b = -radius; b <= radius; ++b) {
            if (a == 0 || b == 0) continue;
            if (std::max(std::abs(a), std::abs(b)) != radius) continue;
            if (fn(vec_of({{i, a}, {j, b}}))) return true;
          }
    // support size 3 (coefficients at the current radius only)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t t = j + 1; t < m; ++t)
          for (long a = -radius; a <= radius; ++a)
            for (long b = -radius; b <= radius; ++b)
              for (long c = -radius; c <= radius; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != radius) continue;
                if (fn(vec_of({{i, a}, {j, b}, {t, c}}))) return true;
              }
  }
  return false;
}

}  // namespace

CartanData cartan_subalgebra(const LieAlgebra& b) {
  {
    ClassifyFlags f = classify(b);
    if (!f.is_solvable)
      throw ValidationError("cartan_subalgebra: input must be solvable");
  }
  const std::size_t n = b.dim();
  Subspace k = b.full_space();
  bool have_witness = false;
  Vec witness;

  while (!restricted_is_nilpotent(b, k)) {
    Vec y;
    bool found = enumerate_combinations(b, k, [&](const Vec& cand) {
      if (ad_nilpotent_in(b, k, cand)) return false;
      y = cand;
      return true;
    });
    if (!found)
      throw ValidationError(
          "cartan_subalgebra: no non-nilpotent element found in the "
          "deterministic enumeration; enlarge the coefficient range");

    // Keep the invariant "k is the generalized nullspace of a single
    // element": combine the previous witness with y so the nullspace shrinks.
    Subspace next(n);
    Vec z;
    bool accepted = false;
    if (!have_witness) {
      z = y;
      next = generalized_nullspace_in(b, k, z);
      accepted = next.dim() < k.dim();
    } else {
      for (long c : {1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L,
                     6L, -6L, 7L, -7L, 8L, -8L}) {
        Vec cand(n);
        for (std::size_t t = 0; t < n; ++t)
          cand[t] = witness[t] + GR(c) * (y[t] - witness[t]);
        Subspace cand_null = generalized_nullspace_in(b, k, cand);
        if (cand_null.dim() < k.dim()) {
          z = std::move(cand);
          next = std::move(cand_null);
          accepted = true;
          break;
        }
      }
    }
    if (!accepted)
      throw ValidationError(
          "cartan_subalgebra: witness combination search exhausted; "
          "enlarge the coefficient range");
    witness = std::move(z);
    have_witness = true;
    k = std::move(next);
  }

  // Defining invariants, plus the solvable-case identity h + b_inf = b.
  if (normalizer(b, k) != k)
    throw InternalError("cartan_subalgebra: result is not self-normalizing");
  Subspace b_inf = series(b, b.full_space(), SeriesKind::lower_central).stable_term();
  if (subspace_sum(k, b_inf).dim() != n)
    throw InternalError("cartan_subalgebra: h + b_infinity != b");
  return {std::move(k)};
}

}  // namespace oexp
