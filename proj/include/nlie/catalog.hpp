#pragma once

#include <stdexcept>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/metric.hpp"

namespace nlie {

struct SimpleParams {
  int n = 3;
  std::vector<int> epsilons;  // n+1 signs, each +1 or -1

  void validate() const {
    if (n < 2) throw std::invalid_argument("simple algebra requires arity >= 2");
    if (epsilons.size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("simple algebra needs n+1 signs");
    for (int e : epsilons)
      if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
};

/// Parameters for the three (n+3)-dimensional metric families. The family
/// coefficients are not free: they are all determined by one nonzero
/// constant c together with the diagonal signs, so the defining constraint
/// cannot be violated through this interface.
struct FamilyParams {
  int n = 3;
  int family_case = 1;  // 1, 2 or 3
  int m = 0;            // diagonal entries are +1 up to index m, -1 after
  int x_sign = 1;       // cases 1 and 2
  int e1_sign = 1;      // case 1 only
  Rational c = 1;

  // Index range carrying a diagonal sign, per case.
  std::pair<int, int> eps_range() const {
    switch (family_case) {
      case 1: return {2, n + 2};
      case 2: return {2, n + 1};
      case 3: return {3, n + 1};
      default: throw std::invalid_argument("family case must be 1, 2 or 3");
    }
  }

  int eps(int i) const { return i <= m ? 1 : -1; }

  void validate() const {
    if (n < 3) throw std::invalid_argument("family constructors require arity >= 3");
    auto [lo, hi] = eps_range();
    if (m < lo - 1 || m > hi)
      throw std::invalid_argument("split index m out of range");
    if (x_sign != 1 && x_sign != -1) throw std::invalid_argument("x sign must be +1 or -1");
    if (e1_sign != 1 && e1_sign != -1) throw std::invalid_argument("e1 sign must be +1 or -1");
    if (is_zero(c)) throw std::invalid_argument("constraint constant c must be nonzero");
  }
};

struct WeightParams {
  int n = 3;
  int t = 0;  // highest weight

  void validate() const {
    if (n < 2) throw std::invalid_argument("arity must be >= 2");
    if (t < 0) throw std::invalid_argument("highest weight must be >= 0");
  }
};

namespace detail {

inline int pow_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

/// The increasing tuple {lo..hi} with the listed indices removed.
inline IndexTuple range_without(int lo, int hi, std::initializer_list<int> skip) {
  IndexTuple t;
  for (int i = lo; i <= hi; ++i) {
    bool drop = false;
    for (int s : skip)
      if (s == i) drop = true;
    if (!drop) t.push_back(i);
  }
  return t;
}

}  // namespace detail

/// The (n+1)-dimensional simple real n-Lie algebra
///   [e_1,..,^e_i,..,e_{n+1}] = (-1)^i eps_i e_i
/// with the invariant diagonal form diag(eps_1,..,eps_{n+1}).
inline MetricNLie simple_real(const SimpleParams& p) {
  p.validate();
  int d = p.n + 1;
  BracketTable table(p.n, d);
  for (int i = 1; i <= d; ++i) {
    Vector v(d);
    v[i - 1] = Rational(detail::pow_sign(i) * p.epsilons[i - 1]);
    table.set(detail::range_without(1, d, {i}), std::move(v));
  }
  std::vector<Rational> diag;
  for (int e : p.epsilons) diag.emplace_back(e);
  return MetricNLie::validated(NLieAlgebra{std::move(table)}, SymForm::diagonal(diag));
}

/// Abelian metric algebra: empty bracket table, any non-degenerate form.
/// The dimension may be smaller than the arity (every bracket is zero
/// anyway); this is what the 2-dimensional tails of trivial extensions use.
inline MetricNLie abelian(int arity, int d, const SymForm& form) {
  if (d < 0 || form.dim() != static_cast<std::size_t>(d))
    throw std::invalid_argument("form dimension does not match");
  return MetricNLie::validated(NLieAlgebra{BracketTable(arity, d)}, form);
}

/// One of the three (n+3)-dimensional non-abelian metric families. Basis
/// order is verbatim from their defining statements: cases 1 and 2 use
/// (x, e_1, .., e_{n+2}), case 3 uses (e_1, .., e_{n+3}).
inline MetricNLie family_n3(const FamilyParams& p) {
  p.validate();
  int n = p.n, d = n + 3;
  BracketTable table(n, d);
  Matrix gram(d, d);
  // Storage index of e_k: cases 1 and 2 put x first.
  auto ix = [&](int k) { return p.family_case == 3 ? k : k + 1; };
  auto set_bracket = [&](IndexTuple family_args, int target, const Rational& coeff) {
    for (int& a : family_args) a = ix(a);
    Vector v(d);
    v[ix(target) - 1] = coeff;
    table.set(family_args, std::move(v));
  };

  switch (p.family_case) {
    case 1: {
      // [e_2,..,^e_r,..,e_{n+2}] = a_r e_r, a_r = (-1)^r eps_r c
      for (int r = 2; r <= n + 2; ++r)
        set_bracket(detail::range_without(2, n + 2, {r}), r,
                    Rational(detail::pow_sign(r) * p.eps(r)) * p.c);
      gram.at(0, 0) = p.x_sign;
      gram.at(1, 1) = p.e1_sign;
      for (int i = 2; i <= n + 2; ++i) gram.at(ix(i) - 1, ix(i) - 1) = p.eps(i);
      break;
    }
    case 2: {
      // [e_2,..,e_{n+1}] = a_1 e_1 with a_1 = (-1)^n c;
      // [e_2,..,^e_i,..,e_{n+2}] = a_i e_i with a_i = (-1)^i eps_i c.
      set_bracket(detail::range_without(2, n + 1, {}), 1,
                  Rational(detail::pow_sign(n)) * p.c);
      for (int i = 2; i <= n + 1; ++i)
        set_bracket(detail::range_without(2, n + 2, {i}), i,
                    Rational(detail::pow_sign(i) * p.eps(i)) * p.c);
      gram.at(0, 0) = p.x_sign;
      gram.at(ix(1) - 1, ix(n + 2) - 1) = 1;
      gram.at(ix(n + 2) - 1, ix(1) - 1) = 1;
      for (int i = 2; i <= n + 1; ++i) gram.at(ix(i) - 1, ix(i) - 1) = p.eps(i);
      break;
    }
    case 3: {
      // [e_3,..,e_{n+2}] = a_1 e_1, [e_3,..,e_{n+1},e_{n+3}] = a_2 e_2,
      // [e_3,..,^e_i,..,e_{n+3}] = a_i e_i; a_1 = (-1)^{n+1} c,
      // a_2 = (-1)^{n+2} c, a_i = (-1)^i eps_i c.
      set_bracket(detail::range_without(3, n + 2, {}), 1,
                  Rational(detail::pow_sign(n + 1)) * p.c);
      set_bracket(detail::range_without(3, n + 3, {n + 2}), 2,
                  Rational(detail::pow_sign(n + 2)) * p.c);
      for (int i = 3; i <= n + 1; ++i)
        set_bracket(detail::range_without(3, n + 3, {i}), i,
                    Rational(detail::pow_sign(i) * p.eps(i)) * p.c);
      gram.at(0, d - 1) = 1;
      gram.at(d - 1, 0) = 1;
      gram.at(1, n + 1) = 1;
      gram.at(n + 1, 1) = 1;
      for (int i = 3; i <= n + 1; ++i) gram.at(i - 1, i - 1) = p.eps(i);
      break;
    }
    default:
      throw std::invalid_argument("family case must be 1, 2 or 3");
  }
  return MetricNLie::validated(NLieAlgebra{std::move(table)}, SymForm{std::move(gram)});
}

/// Simple algebra extended by a k-dimensional abelian orthogonal tail with
/// every mixed bracket zero.
inline MetricNLie trivial_extension(const SimpleParams& p, int k, const SymForm& tail_form) {
  if (k < 0) throw std::invalid_argument("tail dimension must be >= 0");
  if (tail_form.dim() != static_cast<std::size_t>(k))
    throw std::invalid_argument("tail form dimension does not match");
  MetricNLie head = simple_real(p);
  if (k == 0) return head;
  if (!tail_form.is_nondegenerate())
    throw std::invalid_argument("tail form must be non-degenerate");
  return orthogonal_direct_sum(head, abelian(p.n, k, tail_form));
}

/// Dimension of the irreducible module of highest weight t:
/// (n+2t-1)/(n+t-1) * binom(n+t-1, t). Always a positive integer.
inline Rational module_dim(const WeightParams& p) {
  p.validate();
  Rational b(1);
  for (int i = 1; i <= p.t; ++i) b *= rat(p.n - 1 + i, i);
  Rational r = rat(p.n + 2 * p.t - 1, p.n + p.t - 1) * b;
  if (r.get_den() != 1) throw std::logic_error("module dimension is not an integer");
  return r;
}

}  // namespace nlie
