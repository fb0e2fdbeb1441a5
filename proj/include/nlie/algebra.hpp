#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlie/linalg.hpp"
#include "nlie/rational.hpp"

namespace nlie {

/// Basis-index tuple, 1-based.
using IndexTuple = std::vector<int>;

namespace detail {

inline std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    std::uint64_t next = r * (n - k + i);
    if (next / (n - k + i) != r) throw std::overflow_error("binomial overflow");
    r = next / i;
  }
  return r;
}

/// Combinadic rank of a strictly increasing 1-based tuple.
inline std::size_t tuple_rank(const IndexTuple& t) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < t.size(); ++i) r += binom(t[i] - 1, i + 1);
  return r;
}

/// Inverse of tuple_rank for k-subsets of {1..d}.
inline IndexTuple tuple_unrank(std::size_t rank, int d, int k) {
  IndexTuple t(k);
  for (int i = k; i >= 1; --i) {
    int v = i;
    while (v <= d && binom(v, i) <= rank) ++v;
    t[i - 1] = v;
    rank -= binom(v - 1, i);
  }
  return t;
}

/// Visit every strictly increasing k-tuple over {1..d} in rank order.
template <typename F>
void for_each_increasing(int d, int k, F&& f) {
  if (k > d) return;
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    f(const_cast<const IndexTuple&>(t));
    int i = k - 1;
    while (i >= 0 && t[i] == d - (k - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

/// Sorts a tuple, returning the permutation sign, or 0 on a repeat.
inline int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j] <= t[j - 1]; --j) {
      if (t[j] == t[j - 1]) return 0;
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  return sign;
}

/// Sparse vector as (0-based index, coefficient) pairs, index-sorted.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

}  // namespace detail

/// Antisymmetric n-ary bracket on a d-dimensional space, stored only for
/// strictly increasing basis tuples (combinadic dense indexing). An absent
/// tuple means the zero bracket. d may be smaller than n, in which case the
/// table is empty and the bracket identically zero.
class BracketTable {
 public:
  BracketTable(int arity, int dim) : n_(arity), d_(dim) {
    if (arity < 2) throw std::invalid_argument("arity must be >= 2");
    if (dim < 0) throw std::invalid_argument("dimension must be >= 0");
    std::uint64_t slots = detail::binom(dim, arity);
    if (slots > (std::uint64_t{1} << 24))
      throw std::invalid_argument("bracket table too large");
    vals_.resize(static_cast<std::size_t>(slots));
  }

  int arity() const { return n_; }
  int dim() const { return d_; }

  void set(const IndexTuple& args, Vector value) {
    check_tuple(args);
    if (value.size() != static_cast<std::size_t>(d_))
      throw std::invalid_argument("bracket value has wrong length");
    std::size_t r = detail::tuple_rank(args);
    bool was = !vals_[r].empty();
    bool now = !is_zero_vector(value);
    vals_[r] = now ? std::move(value) : Vector{};
    if (now && !was) {
      occupied_.insert(std::lower_bound(occupied_.begin(), occupied_.end(), r), r);
    } else if (!now && was) {
      occupied_.erase(std::lower_bound(occupied_.begin(), occupied_.end(), r));
    }
  }

  /// Stored value for a strictly increasing tuple; nullptr if zero.
  const Vector* get(const IndexTuple& args) const {
    check_tuple(args);
    return get_by_rank(detail::tuple_rank(args));
  }

  const Vector* get_by_rank(std::size_t r) const {
    const Vector& v = vals_[r];
    return v.empty() ? nullptr : &v;
  }

  /// Ranks of nonzero entries, ascending.
  const std::vector<std::size_t>& nonzero_ranks() const { return occupied_; }

  IndexTuple tuple_of_rank(std::size_t r) const { return detail::tuple_unrank(r, d_, n_); }

 private:
  void check_tuple(const IndexTuple& args) const {
    if (args.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("bracket tuple has wrong arity");
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] < 1 || args[i] > d_) throw std::out_of_range("basis index out of range");
      if (i > 0 && args[i] <= args[i - 1])
        throw std::invalid_argument("bracket tuple must be strictly increasing");
    }
  }

  int n_, d_;
  std::vector<Vector> vals_;
  std::vector<std::size_t> occupied_;
};

struct JacobiViolation {
  IndexTuple left;   // the (n-1)-tuple acting as an inner derivation
  IndexTuple right;  // the n-tuple it acts on
  Vector defect;     // nonzero
};

/// An n-Lie algebra presented by structure constants. Construction is raw:
/// the generalized Jacobi identity is a checked property (check_jacobi),
/// not an enforced invariant; catalog constructors validate their outputs.
class NLieAlgebra {
 public:
  explicit NLieAlgebra(BracketTable table) : table_(std::move(table)) {}

  int arity() const { return table_.arity(); }
  int dim() const { return table_.dim(); }
  const BracketTable& table() const { return table_; }

  /// Bracket of basis vectors in any order; repeats give zero.
  Vector eval_basis(IndexTuple indices) const {
    for (int i : indices)
      if (i < 1 || i > dim()) throw std::out_of_range("basis index out of range");
    if (indices.size() != static_cast<std::size_t>(arity()))
      throw std::invalid_argument("wrong number of bracket arguments");
    int sign = detail::sort_with_sign(indices);
    if (sign == 0) return zero_vector(dim());
    const Vector* v = table_.get(indices);
    if (!v) return zero_vector(dim());
    Vector r = *v;
    if (sign < 0)
      for (auto& x : r) x = -x;
    return r;
  }

  /// Bracket of arbitrary vectors, expanded over stored entries by minors:
  /// [v_1,...,v_n] = sum_T det(rows T of [v_1 ... v_n]) * [e_T].
  Vector eval_multilinear(const std::vector<Vector>& vs) const {
    if (vs.size() != static_cast<std::size_t>(arity()))
      throw std::invalid_argument("wrong number of bracket arguments");
    for (const auto& v : vs)
      if (v.size() != static_cast<std::size_t>(dim()))
        throw std::invalid_argument("vector dimension mismatch");
    Vector out(dim());
    int n = arity();
    for (std::size_t rank : table_.nonzero_ranks()) {
      IndexTuple t = table_.tuple_of_rank(rank);
      Matrix minor(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) minor.at(i, j) = vs[j][t[i] - 1];
      Rational c = det(minor);
      if (!is_zero(c)) add_scaled(out, c, *table_.get_by_rank(rank));
    }
    return out;
  }

  /// Matrix of x -> [e_{a_1},...,e_{a_{n-1}}, x] in the standard basis.
  Matrix adjoint_matrix(const IndexTuple& left) const {
    check_left_tuple(left);
    Matrix m(dim(), dim());
    IndexTuple args = left;
    args.push_back(0);
    for (int j = 1; j <= dim(); ++j) {
      args.back() = j;
      Vector col = eval_basis(args);
      for (int i = 0; i < dim(); ++i) m.at(i, j - 1) = std::move(col[i]);
    }
    return m;
  }

  /// All defects of the generalized Jacobi identity over basis tuples
  /// (sufficient by multilinearity). Empty result means the identity holds.
  std::vector<JacobiViolation> check_jacobi(std::size_t max_violations = SIZE_MAX) const {
    std::vector<JacobiViolation> out;
    int n = arity(), d = dim();
    if (d < n) return out;
    detail::for_each_increasing(d, n - 1, [&](const IndexTuple& a) {
      if (out.size() >= max_violations) return;
      std::vector<detail::SparseVec> ad_col = sparse_adjoint_columns(a);
      detail::for_each_increasing(d, n, [&](const IndexTuple& y) {
        if (out.size() >= max_violations) return;
        Vector defect(d);
        bool touched = false;
        // [e_a, [e_y]]
        if (const Vector* w = table_.get_by_rank(detail::tuple_rank(y))) {
          for (int j = 0; j < d; ++j) {
            if (is_zero((*w)[j]) || ad_col[j].empty()) continue;
            for (const auto& [i, c] : ad_col[j]) defect[i] += (*w)[j] * c;
            touched = true;
          }
        }
        // - sum_i [y_1,..,[e_a,y_i],..,y_n]
        IndexTuple sub = y;
        for (int pos = 0; pos < n; ++pos) {
          const detail::SparseVec& u = ad_col[y[pos] - 1];
          if (u.empty()) continue;
          for (const auto& [j, c] : u) {
            sub[pos] = j + 1;
            Vector term = eval_basis(sub);
            if (!is_zero_vector(term)) {
              add_scaled(defect, -c, term);
              touched = true;
            }
          }
          sub[pos] = y[pos];
        }
        if (touched && !is_zero_vector(defect))
          out.push_back({a, y, std::move(defect)});
      });
    });
    return out;
  }

  bool jacobi_ok() const { return check_jacobi(1).empty(); }

  /// g^1: span of all stored bracket values.
  Subspace derived_algebra() const {
    std::vector<Vector> vals;
    for (std::size_t r : table_.nonzero_ranks()) vals.push_back(*table_.get_by_rank(r));
    return Subspace::span_of(dim(), vals);
  }

  /// C(g): common kernel of every inner derivation, via the stacked
  /// adjoint matrices of all increasing (n-1)-tuples.
  Subspace center() const {
    int n = arity(), d = dim();
    if (d < n) return Subspace::full(d);
    std::vector<Vector> rows;
    detail::for_each_increasing(d, n - 1, [&](const IndexTuple& a) {
      Matrix m = adjoint_matrix(a);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Vector row = m.row(i);
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
    });
    if (rows.empty()) return Subspace::full(d);
    return kernel(Matrix::from_rows(rows, d));
  }

  bool is_ideal(const Subspace& s) const {
    check_ambient(s);
    int n = arity(), d = dim();
    if (d < n) return true;
    bool ok = true;
    detail::for_each_increasing(d, n - 1, [&](const IndexTuple& a) {
      if (!ok) return;
      Matrix m = adjoint_matrix(a);
      for (const Vector& v : s.basis())
        if (!s.contains(m.apply(v))) {
          ok = false;
          return;
        }
    });
    return ok;
  }

  bool is_subalgebra(const Subspace& s) const {
    check_ambient(s);
    int n = arity();
    if (s.dim() < static_cast<std::size_t>(n)) return true;
    bool ok = true;
    detail::for_each_increasing(static_cast<int>(s.dim()), n, [&](const IndexTuple& pick) {
      if (!ok) return;
      std::vector<Vector> vs;
      for (int i : pick) vs.push_back(s.basis()[i - 1]);
      if (!s.contains(eval_multilinear(vs))) ok = false;
    });
    return ok;
  }

  /// Descending chain I, [I..I], [[I..I]..[I..I]], ... until it stabilizes,
  /// reaches zero, or max_steps terms have been produced.
  std::vector<Subspace> derived_series(const Subspace& ideal, int max_steps = -1) const {
    check_ambient(ideal);
    if (!is_ideal(ideal)) throw std::invalid_argument("derived_series requires an ideal");
    if (max_steps < 0) max_steps = dim() + 1;
    std::vector<Subspace> terms{ideal};
    while (static_cast<int>(terms.size()) < max_steps) {
      Subspace next = bracket_span(terms.back());
      if (next == terms.back()) break;
      bool zero = next.dim() == 0;
      terms.push_back(std::move(next));
      if (zero) break;
    }
    return terms;
  }

  bool is_n_solvable(const Subspace& ideal) const {
    auto series = derived_series(ideal);
    return series.back().dim() == 0;
  }

 private:
  Subspace bracket_span(const Subspace& s) const {
    int n = arity();
    std::vector<Vector> vals;
    if (s.dim() >= static_cast<std::size_t>(n)) {
      detail::for_each_increasing(static_cast<int>(s.dim()), n, [&](const IndexTuple& pick) {
        std::vector<Vector> vs;
        for (int i : pick) vs.push_back(s.basis()[i - 1]);
        Vector v = eval_multilinear(vs);
        if (!is_zero_vector(v)) vals.push_back(std::move(v));
      });
    }
    return Subspace::span_of(dim(), vals);
  }

  std::vector<detail::SparseVec> sparse_adjoint_columns(const IndexTuple& left) const {
    int d = dim();
    std::vector<detail::SparseVec> cols(d);
    IndexTuple args = left;
    args.push_back(0);
    for (int j = 1; j <= d; ++j) {
      args.back() = j;
      cols[j - 1] = detail::to_sparse(eval_basis(args));
    }
    return cols;
  }

  void check_left_tuple(const IndexTuple& left) const {
    if (left.size() != static_cast<std::size_t>(arity() - 1))
      throw std::invalid_argument("expected an (n-1)-tuple");
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] < 1 || left[i] > dim()) throw std::out_of_range("basis index out of range");
      if (i > 0 && left[i] <= left[i - 1])
        throw std::invalid_argument("tuple must be strictly increasing");
    }
  }

  void check_ambient(const Subspace& s) const {
    if (s.ambient_dim() != static_cast<std::size_t>(dim()))
      throw std::invalid_argument("ambient dimension mismatch");
  }

  static Rational det(Matrix m) {
    std::size_t n = m.rows();
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && is_zero(m.at(pivot, col))) ++pivot;
      if (pivot == n) return Rational(0);
      if (pivot != col) {
        for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        result = -result;
      }
      result *= m.at(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
        if (is_zero(m.at(i, col))) continue;
        Rational f = m.at(i, col) / m.at(col, col);
        for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return result;
  }

  BracketTable table_;
};

}  // namespace nlie
