#include "oexp/lie.hpp"

#include <set>

#include "oexp/error.hpp"

namespace oexp {

namespace {
Vec zero_vec(std::size_t n) { return Vec(n); }

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}
}  // namespace

LieAlgebra LieAlgebra::make_unchecked(std::vector<std::string> basis_names,
                                      std::vector<std::vector<Vec>> upper_brackets) {
  LieAlgebra g;
  g.dim_ = basis_names.size();
  g.names_ = std::move(basis_names);
  g.upper_ = std::move(upper_brackets);
  std::set<std::string> seen(g.names_.begin(), g.names_.end());
  if (seen.size() != g.names_.size())
    throw ValidationError("basis names are not distinct");
  if (g.upper_.size() != g.dim_)
    throw InternalError("bracket table has wrong outer size");
  for (std::size_t i = 0; i < g.dim_; ++i) {
    if (g.upper_[i].size() != g.dim_ - i - 1)
      throw InternalError("bracket table has wrong row size");
    for (const Vec& v : g.upper_[i])
      if (v.size() != g.dim_) throw InternalError("bracket vector has wrong length");
  }
  return g;
}

LieAlgebra LieAlgebra::make(std::vector<std::string> basis_names,
                            std::vector<std::vector<Vec>> upper_brackets) {
  LieAlgebra g = make_unchecked(std::move(basis_names), std::move(upper_brackets));
  StructureReport report = validate_structure(g);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw ValidationError("Jacobi identity fails on basis triple (" +
                          g.names_[v.i] + ", " + g.names_[v.j] + ", " + g.names_[v.k] +
                          ")" + (report.violations.size() > 1
                                     ? " and " + std::to_string(report.violations.size() - 1) +
                                           " more"
                                     : ""));
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, const std::string& name_prefix) {
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> upper(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    names.push_back(name_prefix + std::to_string(i + 1));
    upper[i].assign(dim - i - 1, zero_vec(dim));
  }
  return make(std::move(names), std::move(upper));
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vec(dim_);
  if (i < j) return upper_[i][j - i - 1];
  Vec v = upper_[j][i - j - 1];
  for (auto& e : v) e = -e;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw ValidationError("bracket: dimension mismatch");
  Vec out = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      GR f = x[i] * y[j];
      Vec cij = basis_bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!cij[k].is_zero()) out[k] += f * cij[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
  if (x.size() != dim_) throw ValidationError("ad_matrix: dimension mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec ej = zero_vec(dim_);
    ej[j] = GR(1);
    Vec col = bracket(x, ej);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Subspace LieAlgebra::bracket_span(const Subspace& u, const Subspace& w) const {
  if (u.ambient_dim() != dim_ || w.ambient_dim() != dim_)
    throw ValidationError("bracket_span: ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b)
      rows.push_back(bracket(u.basis_vector(a), w.basis_vector(b)));
  return Subspace::span_vectors(rows, dim_);
}

bool LieAlgebra::is_subalgebra(const Subspace& u) const {
  return u.contains(bracket_span(u, u));
}

bool LieAlgebra::is_ideal(const Subspace& u) const {
  return u.contains(bracket_span(full_space(), u));
}

Subspace LieAlgebra::center() const {
  // Stack the ad matrices of all basis vectors; the center is the joint kernel.
  Matrix stacked(0, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = zero_vec(dim_);
    ei[i] = GR(1);
    stacked = stacked.vstack(ad_matrix(ei));
  }
  return kernel(stacked);
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(upper_[i][j - i - 1])) return false;
  return true;
}

StructureReport validate_structure(const LieAlgebra& g) {
  StructureReport report;
  const std::size_t n = g.dim();
  auto unit = [&](std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = GR(1);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec d = add(add(g.bracket(g.basis_bracket(i, j), unit(k)),
                        g.bracket(g.basis_bracket(j, k), unit(i))),
                    g.bracket(g.basis_bracket(k, i), unit(j)));
        if (!vec_is_zero(d)) report.violations.push_back({i, j, k, std::move(d)});
      }
  return report;
}

SeriesChain series(const LieAlgebra& g, const Subspace& on, SeriesKind kind) {
  if (!g.is_subalgebra(on))
    throw ValidationError("series: the given subspace is not a subalgebra");
  SeriesChain chain{kind, {on}};
  while (true) {
    const Subspace& last = chain.terms.back();
    Subspace next = (kind == SeriesKind::lower_central)
                        ? g.bracket_span(on, last)
                        : g.bracket_span(last, last);
    if (next == last) break;
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal,
                        const std::string& name_suffix) {
  if (!g.is_ideal(ideal)) throw ValidationError("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  Subspace comp = complement_within(ideal, g.full_space());
  const std::size_t m = comp.dim();

  // Change of basis: columns are (ideal basis | complement basis). The last m
  // rows of its inverse give the projection onto quotient coordinates.
  Matrix cols(n, n);
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) cols.at(c, r) = ideal.basis().at(r, c);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) cols.at(c, ideal.dim() + r) = comp.basis().at(r, c);
  auto inv = solve_linear(cols, Matrix::identity(n));
  if (!inv) throw InternalError("quotient: basis change is singular");
  Matrix projection(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) projection.at(r, c) = inv->at(ideal.dim() + r, c);

  std::vector<std::string> names;
  for (std::size_t r = 0; r < m; ++r) {
    // Prefer the ambient name when the complement row is a plain basis vector.
    std::size_t pivot = comp.pivot_cols()[r];
    Vec row = comp.basis_vector(r);
    bool plain = true;
    for (std::size_t c = 0; c < n; ++c)
      if (c != pivot && !row[c].is_zero()) plain = false;
    names.push_back(plain ? g.basis_names()[pivot] + name_suffix
                          : "q" + std::to_string(r + 1) + name_suffix);
  }

  std::vector<std::vector<Vec>> upper(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec br = g.bracket(comp.basis_vector(i), comp.basis_vector(j));
      upper[i].push_back(projection.apply(br));
    }
  }
  LieAlgebra q = LieAlgebra::make(std::move(names), std::move(upper));
  return {std::move(q), std::move(projection), std::move(comp)};
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& subalg) {
  if (!g.is_subalgebra(subalg))
    throw ValidationError("restrict: subspace is not closed under the bracket");
  const std::size_t m = subalg.dim();
  std::vector<std::string> names;
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t pivot = subalg.pivot_cols()[r];
    Vec row = subalg.basis_vector(r);
    bool plain = true;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (c != pivot && !row[c].is_zero()) plain = false;
    names.push_back(plain ? g.basis_names()[pivot] : "u" + std::to_string(r + 1));
  }
  std::vector<std::vector<Vec>> upper(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec br = g.bracket(subalg.basis_vector(i), subalg.basis_vector(j));
      auto coords = subalg.coordinates_of(br);
      if (!coords) throw InternalError("restrict: bracket left the subalgebra");
      upper[i].push_back(std::move(*coords));
    }
  return LieAlgebra::make(std::move(names), std::move(upper));
}

LieAlgebra semidirect(const LieAlgebra& b, const LieAlgebra& l,
                      const std::vector<Matrix>& action) {
  const std::size_t nb = b.dim(), nl = l.dim(), n = nb + nl;
  if (action.size() != nl)
    throw ValidationError("semidirect: one action matrix per basis element of l required");
  for (const Matrix& d : action)
    if (d.rows() != nb || d.cols() != nb)
      throw ValidationError("semidirect: action matrix has wrong shape");

  // Each action matrix must be a derivation of b.
  auto unit_b = [&](std::size_t i) {
    Vec v = zero_vec(nb);
    v[i] = GR(1);
    return v;
  };
  for (std::size_t a = 0; a < nl; ++a) {
    const Matrix& d = action[a];
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = i + 1; j < nb; ++j) {
        Vec lhs = d.apply(b.basis_bracket(i, j));
        Vec rhs = add(b.bracket(d.apply(unit_b(i)), unit_b(j)),
                      b.bracket(unit_b(i), d.apply(unit_b(j))));
        for (std::size_t k = 0; k < nb; ++k)
          if (lhs[k] != rhs[k])
            throw ValidationError("semidirect: action of " + l.basis_names()[a] +
                                  " is not a derivation of the first factor");
      }
  }
  // And the assignment must be a Lie homomorphism into those derivations.
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t c = a + 1; c < nl; ++c) {
      Vec lab = l.basis_bracket(a, c);
      Matrix expect(nb, nb);
      for (std::size_t k = 0; k < nl; ++k)
        if (!lab[k].is_zero()) {
          for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t s = 0; s < nb; ++s)
              expect.at(r, s) += lab[k] * action[k].at(r, s);
        }
      Matrix got = action[a] * action[c] - action[c] * action[a];
      if (!(got == expect))
        throw ValidationError("semidirect: action is not a Lie homomorphism on (" +
                              l.basis_names()[a] + ", " + l.basis_names()[c] + ")");
    }

  std::vector<std::string> names = b.basis_names();
  for (const auto& s : l.basis_names()) names.push_back(s);

  auto embed_b = [&](const Vec& v) {
    Vec out = zero_vec(n);
    for (std::size_t k = 0; k < nb; ++k) out[k] = v[k];
    return out;
  };
  std::vector<std::vector<Vec>> upper(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v;
      if (j < nb) {
        v = embed_b(b.basis_bracket(i, j));
      } else if (i >= nb) {
        Vec w = l.basis_bracket(i - nb, j - nb);
        v = zero_vec(n);
        for (std::size_t k = 0; k < nl; ++k) v[nb + k] = w[k];
      } else {
        // [b_i, l_a] = -D_a(b_i)
        Vec w = action[j - nb].apply(unit_b(i));
        v = embed_b(w);
        for (auto& e : v) e = -e;
      }
      upper[i].push_back(std::move(v));
    }
  return LieAlgebra::make(std::move(names), std::move(upper));
}

}  // namespace oexp
