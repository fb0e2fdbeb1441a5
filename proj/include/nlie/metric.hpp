#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

/// Symmetric bilinear form given by its Gram matrix. Symmetry is enforced
/// at construction; non-degeneracy is a checked property.
class SymForm {
 public:
  explicit SymForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric())
      throw std::invalid_argument("Gram matrix must be symmetric");
  }

  static SymForm identity(std::size_t d) { return SymForm(Matrix::identity(d)); }

  static SymForm diagonal(const std::vector<Rational>& entries) {
    Matrix g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
    return SymForm(std::move(g));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Rational eval(const Vector& u, const Vector& v) const {
    Vector gv = gram_.apply(v);
    if (u.size() != gv.size()) throw std::invalid_argument("vector dimension mismatch");
    Rational r;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!is_zero(u[i]) && !is_zero(gv[i])) r += u[i] * gv[i];
    return r;
  }

  bool is_nondegenerate() const { return rref(gram_).second == gram_.rows(); }

  std::pair<std::size_t, std::size_t> signature() const { return nlie::signature(gram_); }

 private:
  Matrix gram_;
};

struct InvarianceViolation {
  IndexTuple left;  // the (n-1)-tuple whose inner derivation fails to be skew
  int u, v;         // offending basis pair, 1-based
  Rational defect;  // <ad(e_u), e_v> + <e_u, ad(e_v)>, nonzero
};

/// An n-Lie algebra with a symmetric bilinear form. `validated` requires a
/// non-degenerate form, a Jacobi-clean bracket, and invariance of the form
/// under all inner derivations; `raw` defers every check (negative controls
/// and ansatz tables need to hold invalid data).
class MetricNLie {
 public:
  static MetricNLie raw(NLieAlgebra algebra, SymForm form) {
    return MetricNLie(std::move(algebra), std::move(form), false);
  }

  static MetricNLie validated(NLieAlgebra algebra, SymForm form) {
    MetricNLie m(std::move(algebra), std::move(form), true);
    if (!m.form_.is_nondegenerate())
      throw std::invalid_argument("metric n-Lie algebra requires a non-degenerate form");
    if (!m.algebra_.jacobi_ok())
      throw std::invalid_argument("bracket table violates the generalized Jacobi identity");
    if (!m.check_invariance(1).empty())
      throw std::invalid_argument("form is not invariant under inner derivations");
    return m;
  }

  const NLieAlgebra& algebra() const { return algebra_; }
  const SymForm& form() const { return form_; }
  bool is_validated() const { return validated_; }
  int arity() const { return algebra_.arity(); }
  int dim() const { return algebra_.dim(); }

  /// Skewness defects of every inner derivation: entries of ad^T G + G ad.
  /// Empty iff the form is invariant.
  std::vector<InvarianceViolation> check_invariance(std::size_t max_violations = SIZE_MAX) const {
    std::vector<InvarianceViolation> out;
    int n = algebra_.arity(), d = algebra_.dim();
    if (static_cast<std::size_t>(d) != form_.dim())
      throw std::invalid_argument("form dimension does not match algebra dimension");
    if (d < n - 1) return out;
    const Matrix& g = form_.gram();
    detail::for_each_increasing(d, n - 1, [&](const IndexTuple& a) {
      if (out.size() >= max_violations) return;
      Matrix ad = algebra_.adjoint_matrix(a);
      Matrix defect = ad.transpose() * g;
      Matrix gm = g * ad;
      for (int u = 0; u < d && out.size() < max_violations; ++u)
        for (int v = u; v < d && out.size() < max_violations; ++v) {
          Rational s = defect.at(u, v) + gm.at(u, v);
          if (!is_zero(s)) out.push_back({a, u + 1, v + 1, std::move(s)});
        }
    });
    return out;
  }

  /// W-perp, the annihilator of W under the form.
  Subspace orthogonal_complement(const Subspace& w) const {
    if (w.ambient_dim() != static_cast<std::size_t>(dim()))
      throw std::invalid_argument("ambient dimension mismatch");
    if (!form_.is_nondegenerate())
      throw std::invalid_argument("orthogonal complement requires a non-degenerate form");
    if (w.dim() == 0) return Subspace::full(dim());
    Matrix rows(w.dim(), dim());
    for (std::size_t i = 0; i < w.dim(); ++i) {
      Vector gw = form_.gram().apply(w.basis()[i]);
      for (int j = 0; j < dim(); ++j) rows.at(i, j) = std::move(gw[j]);
    }
    return kernel(rows);
  }

  bool is_isotropic(const Subspace& w) const {
    return orthogonal_complement(w).contains(w);
  }

  bool is_nondegenerate_subspace(const Subspace& w) const {
    return w.intersect(orthogonal_complement(w)).dim() == 0;
  }

  /// The Lemma "center equals the perp of the derived algebra" as an
  /// executable identity.
  bool verify_center_perp() const {
    return algebra_.center() == orthogonal_complement(algebra_.derived_algebra());
  }

 private:
  MetricNLie(NLieAlgebra algebra, SymForm form, bool validated)
      : algebra_(std::move(algebra)), form_(std::move(form)), validated_(validated) {
    if (static_cast<std::size_t>(algebra_.dim()) != form_.dim())
      throw std::invalid_argument("form dimension does not match algebra dimension");
  }

  NLieAlgebra algebra_;
  SymForm form_;
  bool validated_;
};

/// Block sum: brackets vanish across the summands and the form is
/// block-diagonal. Validated whenever both inputs are.
inline MetricNLie orthogonal_direct_sum(const MetricNLie& m1, const MetricNLie& m2) {
  if (m1.arity() != m2.arity()) throw std::invalid_argument("arity mismatch");
  int n = m1.arity();
  int d1 = m1.dim(), d2 = m2.dim(), d = d1 + d2;
  BracketTable table(n, d);
  auto copy_block = [&](const BracketTable& src, int shift) {
    for (std::size_t r : src.nonzero_ranks()) {
      IndexTuple t = src.tuple_of_rank(r);
      for (int& i : t) i += shift;
      Vector v(d);
      const Vector& sv = *src.get_by_rank(r);
      for (std::size_t i = 0; i < sv.size(); ++i) v[i + shift] = sv[i];
      table.set(t, std::move(v));
    }
  };
  copy_block(m1.algebra().table(), 0);
  copy_block(m2.algebra().table(), d1);
  Matrix gram(d, d);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) gram.at(i, j) = m1.form().gram().at(i, j);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j) gram.at(d1 + i, d1 + j) = m2.form().gram().at(i, j);
  NLieAlgebra alg{std::move(table)};
  SymForm form{std::move(gram)};
  if (m1.is_validated() && m2.is_validated())
    return MetricNLie::validated(std::move(alg), std::move(form));
  return MetricNLie::raw(std::move(alg), std::move(form));
}

/// If the center holds a vector x with <x,x> != 0, peel off the line Rx and
/// return it together with the induced metric algebra on its complement.
/// Returns nullopt when the center is zero or isotropic. One line at a
/// time; iterate at the call site to strip a maximal abelian factor.
inline std::optional<std::pair<Subspace, MetricNLie>> split_off_nonisotropic_center(
    const MetricNLie& m) {
  if (!m.is_validated())
    throw std::invalid_argument("split requires a validated metric algebra");
  Subspace c = m.algebra().center();
  if (c.dim() == 0) return std::nullopt;
  // Find a center vector of nonzero length: a basis vector if one works,
  // else b_i + b_j for a nonzero off-diagonal pair of the restricted form.
  std::optional<Vector> x;
  for (const Vector& b : c.basis())
    if (!is_zero(m.form().eval(b, b))) {
      x = b;
      break;
    }
  if (!x) {
    for (std::size_t i = 0; i < c.dim() && !x; ++i)
      for (std::size_t j = i + 1; j < c.dim() && !x; ++j)
        if (!is_zero(m.form().eval(c.basis()[i], c.basis()[j]))) {
          Vector v = c.basis()[i];
          add_scaled(v, Rational(1), c.basis()[j]);
          x = std::move(v);
        }
  }
  if (!x) return std::nullopt;  // center is isotropic

  Subspace line = Subspace::span_of(m.dim(), {*x});
  Subspace comp = m.orthogonal_complement(line);
  int n = m.arity();
  int cd = static_cast<int>(comp.dim());
  // Coordinates relative to the RREF basis of the complement: a member's
  // coefficient on basis row i is its entry at that row's pivot column.
  std::vector<std::size_t> pivots;
  for (const Vector& b : comp.basis()) {
    std::size_t p = 0;
    while (is_zero(b[p])) ++p;
    pivots.push_back(p);
  }
  BracketTable table(n, cd);
  if (cd >= n) {
    detail::for_each_increasing(cd, n, [&](const IndexTuple& pick) {
      std::vector<Vector> vs;
      for (int i : pick) vs.push_back(comp.basis()[i - 1]);
      Vector w = m.algebra().eval_multilinear(vs);
      if (is_zero_vector(w)) return;
      if (!comp.contains(w))
        throw std::logic_error("complement of a central line is not closed under the bracket");
      Vector coords(cd);
      for (int i = 0; i < cd; ++i) coords[i] = w[pivots[i]];
      table.set(pick, std::move(coords));
    });
  }
  Matrix gram(cd, cd);
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < cd; ++j)
      gram.at(i, j) = m.form().eval(comp.basis()[i], comp.basis()[j]);
  return std::make_pair(line,
                        MetricNLie::validated(NLieAlgebra{std::move(table)},
                                              SymForm{std::move(gram)}));
}

}  // namespace nlie
