#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oexp/rational.hpp"

namespace oexp {

using Vec = std::vector<GR>;

// Dense matrix over the Gaussian rationals. Values are immutable in spirit:
// every operation returns a fresh matrix.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<GR> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const GR& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  GR& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  GR trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // Matrix-vector product (x as column).
  Vec apply(const Vec& x) const;

  // Stacks rows of `below` underneath this matrix (same column count).
  Matrix vstack(const Matrix& below) const;

private:
  std::size_t rows_, cols_;
  std::vector<GR> entries_;
};

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Canonical reduced row-echelon form; idempotent, rank included.
RrefResult rref(const Matrix& m);

// True iff m^n = 0 for square m of size n (exact; via Newton trace test).
bool is_nilpotent_matrix(const Matrix& m);

// Solves a*x = b for any solution x (free variables set to zero).
// Returns nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);
std::optional<Vec> solve_linear_vec(const Matrix& a, const Vec& b);

// Linear subspace of an ambient coordinate space, held as a reduced
// row-echelon basis so that equal subspaces have identical representations.
class Subspace {
public:
  Subspace() : Subspace(0) {}

  // The zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Canonicalizes the given spanning rows (they need not be independent).
  static Subspace span(const Matrix& spanning_rows);
  static Subspace span_vectors(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in this subspace's echelon basis; nullopt if v is
  // outside the subspace.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : m x = 0} as a canonical subspace of the column space.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

// For u <= w, the canonical complement v with u (+) v = w: the echelon rows
// of w whose pivot is not a pivot of u. Throws ValidationError when u is not
// contained in w or ambient dimensions differ.
Subspace complement_within(const Subspace& u, const Subspace& w);

}  // namespace oexp
