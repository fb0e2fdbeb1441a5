#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

using Vector = std::vector<Rational>;

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

inline Vector zero_vector(std::size_t d) { return Vector(d); }

inline Vector unit_vector(std::size_t d, std::size_t i) {
  Vector v(d);
  v.at(i) = 1;
  return v;
}

inline void add_scaled(Vector& dst, const Rational& c, const Vector& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("vector length mismatch");
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!is_zero(src[i])) dst[i] += c * src[i];
}

/// Dense rational matrix, row-major. Dimensions are fixed at construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (is_zero(at(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!is_zero(o.at(k, j))) p.at(i, j) += at(i, k) * o.at(k, j);
      }
    return p;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(at(i, j)) && !is_zero(v[j])) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduced row-echelon form (Gauss-Jordan, exact pivots).
inline std::pair<Matrix, std::size_t> rref(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(rank, j));
    Rational inv = 1 / m.at(rank, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || is_zero(m.at(i, col))) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return {std::move(m), rank};
}

/// Subspace of Q^d held as a canonical RREF basis: two subspaces are equal
/// iff their stored bases are identical row for row.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t d) { return Subspace(d); }

  static Subspace full(std::size_t d) {
    Subspace s(d);
    for (std::size_t i = 0; i < d; ++i) s.basis_.push_back(unit_vector(d, i));
    return s;
  }

  static Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    auto [r, rank] = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < rank; ++i) s.basis_.push_back(r.row(i));
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    Vector r = v;
    for (const auto& b : basis_) {
      std::size_t p = pivot_of(b);
      if (!is_zero(r[p])) add_scaled(r, -r[p], b);
    }
    return is_zero_vector(r);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  /// Sum of subspaces (join).
  Subspace add(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span_of(ambient_, all);
  }

  /// Rows annihilating this subspace under the standard dot product;
  /// x lies in the subspace iff constraint_matrix() * x = 0.
  Matrix constraint_matrix() const;

  Subspace intersect(const Subspace& o) const;

 private:
  static std::size_t pivot_of(const Vector& b) {
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!is_zero(b[j])) return j;
    throw std::logic_error("zero row in subspace basis");
  }

  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// Null space {v : m v = 0} as a canonical subspace.
inline Subspace kernel(const Matrix& m) {
  auto [r, rank] = rref(m);
  std::size_t d = m.cols();
  std::vector<bool> is_pivot(d, false);
  std::vector<std::size_t> pivot_col(rank);
  for (std::size_t i = 0, col = 0; i < rank; ++i) {
    while (is_zero(r.at(i, col))) ++col;
    is_pivot[col] = true;
    pivot_col[i] = col;
  }
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vector v(d);
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -r.at(i, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span_of(d, gens);
}

inline Matrix Subspace::constraint_matrix() const {
  if (basis_.empty()) return Matrix::identity(ambient_);
  Subspace ann = kernel(Matrix::from_rows(basis_, ambient_));
  return Matrix::from_rows(ann.basis(), ambient_);
}

inline Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Matrix c1 = constraint_matrix();
  Matrix c2 = o.constraint_matrix();
  Matrix stacked(c1.rows() + c2.rows(), ambient_);
  for (std::size_t i = 0; i < c1.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = c1.at(i, j);
  for (std::size_t i = 0; i < c2.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked.at(c1.rows() + i, j) = c2.at(i, j);
  return kernel(stacked);
}

/// Sylvester inertia (p, q) of a symmetric matrix by congruence
/// diagonalization. A zero diagonal with a nonzero off-diagonal entry is
/// handled by adding the partner row/column first (turns the hyperbolic
/// block into a nonzero diagonal entry).
inline std::pair<std::size_t, std::size_t> signature(Matrix g) {
  if (!g.is_symmetric()) throw std::invalid_argument("signature requires a symmetric matrix");
  std::size_t d = g.rows();
  std::size_t p = 0, q = 0;
  for (std::size_t k = 0; k < d; ++k) {
    if (is_zero(g.at(k, k))) {
      // look for a later nonzero diagonal entry to swap in
      std::size_t sw = k + 1;
      while (sw < d && is_zero(g.at(sw, sw))) ++sw;
      if (sw < d) {
        for (std::size_t j = 0; j < d; ++j) std::swap(g.at(k, j), g.at(sw, j));
        for (std::size_t i = 0; i < d; ++i) std::swap(g.at(i, k), g.at(i, sw));
      } else {
        std::size_t partner = k + 1;
        while (partner < d && is_zero(g.at(k, partner))) ++partner;
        if (partner == d) continue;  // row/col k is entirely zero: radical direction
        for (std::size_t j = 0; j < d; ++j) g.at(k, j) += g.at(partner, j);
        for (std::size_t i = 0; i < d; ++i) g.at(i, k) += g.at(i, partner);
      }
    }
    Rational piv = g.at(k, k);
    for (std::size_t i = k + 1; i < d; ++i) {
      if (is_zero(g.at(i, k))) continue;
      Rational f = g.at(i, k) / piv;
      for (std::size_t j = 0; j < d; ++j) g.at(i, j) -= f * g.at(k, j);
      for (std::size_t j = 0; j < d; ++j) g.at(j, i) -= f * g.at(j, k);
    }
    (sgn(piv) > 0 ? p : q) += 1;
  }
  return {p, q};
}

}  // namespace nlie
