#include "oexp/matrix.hpp"

#include "oexp/error.hpp"

namespace oexp {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GR> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InternalError("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GR(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InternalError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

GR Matrix::trace() const {
  if (!is_square()) throw ValidationError("trace of non-square matrix");
  GR t;
  for (std::size_t k = 0; k < rows_; ++k) t += at(k, k);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GR& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const GR& bkc = b.at(k, c);
        if (!bkc.is_zero()) p.at(r, c) += ark * bkc;
      }
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InternalError("matrix sum shape mismatch");
  Matrix s(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    s.entries_[k] = a.entries_[k] + b.entries_[k];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InternalError("matrix difference shape mismatch");
  Matrix s(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    s.entries_[k] = a.entries_[k] - b.entries_[k];
  return s;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw InternalError("matrix apply shape mismatch");
  Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw InternalError("vstack column mismatch");
  Matrix s(rows_ + below.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < below.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.at(rows_ + r, c) = below.at(r, c);
  return s;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(piv, c), a.at(lead, c));
    GR inv = GR(1) / a.at(lead, col);
    for (std::size_t c = col; c < cols; ++c) a.at(lead, c) = a.at(lead, c) * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      GR f = a.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < cols; ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square()) throw ValidationError("nilpotency test needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return true;
  // Over a field of characteristic zero, m is nilpotent iff tr(m^k) = 0 for
  // k = 1..n (Newton's identities force all eigenvalues to zero).
  Matrix p = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!p.trace().is_zero()) return false;
    if (k < n) {
      if (p.is_zero()) return true;
      p = p * m;
    }
  }
  return true;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("solve_linear shape mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Matrix aug(a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < k; ++c) aug.at(r, n + c) = b.at(r, c);
  }
  RrefResult red = rref(aug);
  // Any pivot landing in the b-block makes the system inconsistent.
  for (std::size_t p : red.pivot_cols)
    if (p >= n) return std::nullopt;
  Matrix x(n, k);
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    std::size_t col = red.pivot_cols[r];
    for (std::size_t c = 0; c < k; ++c) x.at(col, c) = red.matrix.at(r, n + c);
  }
  return x;
}

std::optional<Vec> solve_linear_vec(const Matrix& a, const Vec& b) {
  Matrix bcol(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) bcol.at(r, 0) = b[r];
  auto x = solve_linear(a, bcol);
  if (!x) return std::nullopt;
  Vec out(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) out[r] = x->at(r, 0);
  return out;
}

Subspace Subspace::span(const Matrix& spanning_rows) {
  Subspace s(spanning_rows.cols());
  RrefResult red = rref(spanning_rows);
  Matrix basis(red.rank, spanning_rows.cols());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < spanning_rows.cols(); ++c)
      basis.at(r, c) = red.matrix.at(r, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(red.pivot_cols);
  return s;
}

Subspace Subspace::span_vectors(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw ValidationError("ambient dimension mismatch");
  // Echelon basis: the coefficient on row r is just v at that row's pivot.
  Vec coeff(dim());
  Vec residual = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    coeff[r] = residual[pivots_[r]];
    if (!coeff[r].is_zero())
      for (std::size_t c = 0; c < ambient_; ++c)
        residual[c] -= coeff[r] * basis_.at(r, c);
  }
  for (const auto& e : residual)
    if (!e.is_zero()) return std::nullopt;
  return coeff;
}

Subspace kernel(const Matrix& m) {
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n);
    v[free_col] = GR(1);
    for (std::size_t r = 0; r < red.rank; ++r)
      v[red.pivot_cols[r]] = -red.matrix.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return Subspace::span_vectors(basis, n);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw ValidationError("subspace sum: ambient dimension mismatch");
  return Subspace::span(u.basis().vstack(w.basis()));
}

namespace {
// Annihilator under the plain (non-conjugated) bilinear pairing; it is
// nondegenerate over Q(i), so ann(ann(U)) = U.
Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.ambient_dim());
  return kernel(u.basis());
}
}  // namespace

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw ValidationError("subspace intersect: ambient dimension mismatch");
  return annihilator(subspace_sum(annihilator(u), annihilator(w)));
}

Subspace complement_within(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw ValidationError("complement_within: ambient dimension mismatch");
  if (!w.contains(u))
    throw ValidationError("complement_within: first subspace is not contained in the second");
  std::vector<bool> u_pivot(u.ambient_dim(), false);
  for (std::size_t p : u.pivot_cols()) u_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < w.dim(); ++r)
    if (!u_pivot[w.pivot_cols()[r]]) rows.push_back(w.basis_vector(r));
  return Subspace::span_vectors(rows, u.ambient_dim());
}

}  // namespace oexp
