#include "nlie/metric.hpp"

#include <gtest/gtest.h>

#include "nlie/catalog.hpp"
#include "test_util.hpp"

using namespace nlie;
using testutil::random_vector;

namespace {

Vector vec(std::vector<int> entries) {
  Vector v;
  for (int e : entries) v.emplace_back(e);
  return v;
}

MetricNLie simple3_metric() { return simple_real({3, {1, 1, 1, 1}}); }

FamilyParams case_params(int n, int fc) {
  FamilyParams p;
  p.n = n;
  p.family_case = fc;
  p.m = p.eps_range().second;  // all +1
  return p;
}

TEST(SymForm, RejectsAsymmetricGram) {
  Matrix g(2, 2);
  g.at(0, 1) = 1;
  EXPECT_THROW(SymForm{g}, std::invalid_argument);
}

TEST(Invariance, SimpleWithDiagonalFormIsInvariant) {
  EXPECT_TRUE(simple3_metric().check_invariance().empty());
  for (std::vector<int> eps : {std::vector<int>{1, -1, 1, -1}, std::vector<int>{-1, -1, -1, -1}})
    EXPECT_TRUE(simple_real({3, eps}).check_invariance().empty());
}

TEST(Invariance, AbelianWithAnyFormIsInvariant) {
  Matrix g(3, 3);
  g.at(0, 2) = g.at(2, 0) = 1;
  g.at(1, 1) = -1;
  EXPECT_TRUE(abelian(3, 3, SymForm{g}).check_invariance().empty());
}

TEST(Invariance, FlippedCoefficientIsCaughtWithWitness) {
  // case 2 with a_1 replaced by -a_1 breaks the defining constraint
  MetricNLie good = family_n3(case_params(3, 2));
  BracketTable t = good.algebra().table();
  IndexTuple args{3, 4, 5};  // [e_2, e_3, e_4] in storage indices (x is first)
  Vector v = *t.get(args);
  for (auto& x : v) x = -x;
  t.set(args, std::move(v));
  MetricNLie bad = MetricNLie::raw(NLieAlgebra{std::move(t)}, good.form());
  auto violations = bad.check_invariance();
  ASSERT_FALSE(violations.empty());
  EXPECT_FALSE(is_zero(violations[0].defect));
  EXPECT_THROW(MetricNLie::validated(bad.algebra(), bad.form()), std::invalid_argument);
}

TEST(Validation, DegenerateFormRejected) {
  Matrix g(4, 4);
  g.at(0, 0) = 1;  // rank 1
  EXPECT_THROW(MetricNLie::validated(NLieAlgebra{BracketTable(3, 4)}, SymForm{g}),
               std::invalid_argument);
}

TEST(Complement, FullAndCoordinateCases) {
  MetricNLie m = abelian(3, 2, SymForm::identity(2));
  EXPECT_EQ(m.orthogonal_complement(Subspace::full(2)), Subspace::zero(2));
  EXPECT_EQ(m.orthogonal_complement(Subspace::span_of(2, {vec({1, 0})})),
            Subspace::span_of(2, {vec({0, 1})}));
}

TEST(Complement, Case3CenterPerp) {
  MetricNLie m = family_n3(case_params(3, 3));
  Subspace center = Subspace::span_of(6, {vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0})});
  Subspace perp = m.orthogonal_complement(center);
  // {e1, e2}-perp = span{e1, .., e4}: kill the two hyperbolic partners
  Subspace expected = Subspace::span_of(
      6, {vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0}),
          vec({0, 0, 0, 1, 0, 0})});
  EXPECT_EQ(perp, expected);
  EXPECT_EQ(perp, m.orthogonal_complement(m.algebra().center()));
  EXPECT_EQ(m.algebra().derived_algebra().dim(), 4u);
}

TEST(Complement, DoubleComplementAndDimension) {
  std::mt19937 gen(43);
  MetricNLie m = family_n3(case_params(3, 3));  // indefinite form with isotropic vectors
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t count = gen() % 4;
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < count; ++i) vs.push_back(random_vector(gen, 6));
    Subspace w = Subspace::span_of(6, vs);
    Subspace perp = m.orthogonal_complement(w);
    EXPECT_EQ(w.dim() + perp.dim(), 6u);
    EXPECT_EQ(m.orthogonal_complement(perp), w);
  }
}

TEST(Isotropy, ZeroSubspaceIsBoth) {
  MetricNLie m = simple3_metric();
  EXPECT_TRUE(m.is_isotropic(Subspace::zero(4)));
  EXPECT_TRUE(m.is_nondegenerate_subspace(Subspace::zero(4)));
}

TEST(Isotropy, Case3CenterLineIsIsotropic) {
  MetricNLie m = family_n3(case_params(3, 3));
  EXPECT_TRUE(m.is_isotropic(Subspace::span_of(6, {vec({1, 0, 0, 0, 0, 0})})));
  EXPECT_TRUE(m.is_isotropic(m.algebra().center()));
  EXPECT_FALSE(m.is_nondegenerate_subspace(m.algebra().center()));
}

TEST(Isotropy, Case1CenterLineIsNondegenerate) {
  MetricNLie m = family_n3(case_params(3, 1));
  Subspace x_line = Subspace::span_of(6, {vec({1, 0, 0, 0, 0, 0})});
  EXPECT_TRUE(m.is_nondegenerate_subspace(x_line));
  EXPECT_FALSE(m.is_isotropic(x_line));
}

TEST(DirectSum, AbelianPlusAbelian) {
  MetricNLie s = orthogonal_direct_sum(abelian(3, 2, SymForm::identity(2)),
                                       abelian(3, 3, SymForm::diagonal({rat(1), rat(-1), rat(1)})));
  EXPECT_EQ(s.dim(), 5);
  EXPECT_EQ(s.algebra().derived_algebra().dim(), 0u);
  EXPECT_TRUE(s.is_validated());
  EXPECT_EQ(s.form().signature(), (std::pair<std::size_t, std::size_t>{4, 1}));
}

TEST(DirectSum, SimplePlusTailRevalidates) {
  MetricNLie s = orthogonal_direct_sum(simple3_metric(), abelian(3, 2, SymForm::identity(2)));
  EXPECT_EQ(s.dim(), 6);
  EXPECT_TRUE(s.is_validated());
  EXPECT_TRUE(s.algebra().check_jacobi().empty());
  EXPECT_TRUE(s.check_invariance().empty());
  // mixed brackets vanish
  EXPECT_EQ(s.algebra().eval_basis({1, 2, 5}), zero_vector(6));
  EXPECT_EQ(s.algebra().eval_basis({4, 5, 6}), zero_vector(6));
  EXPECT_EQ(s.algebra().derived_algebra().dim(), 4u);
}

TEST(DirectSum, ArityMismatchRejected) {
  EXPECT_THROW(orthogonal_direct_sum(abelian(3, 2, SymForm::identity(2)),
                                     abelian(2, 2, SymForm::identity(2))),
               std::invalid_argument);
}

TEST(Split, Case1PeelsOffTheCenterLine) {
  MetricNLie m = family_n3(case_params(3, 1));
  auto split = split_off_nonisotropic_center(m);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->first.dim(), 1u);
  EXPECT_EQ(split->second.dim(), 5);
  EXPECT_TRUE(split->second.form().is_nondegenerate());
  EXPECT_LT(split->second.algebra().center().dim(), m.algebra().center().dim());
  EXPECT_TRUE(split->second.is_validated());
}

TEST(Split, Case3IsotropicCenterGivesNothing) {
  EXPECT_FALSE(split_off_nonisotropic_center(family_n3(case_params(3, 3))).has_value());
}

TEST(Split, DefiniteAbelianSplitsALine) {
  auto split = split_off_nonisotropic_center(abelian(3, 3, SymForm::identity(3)));
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->second.dim(), 2);
}

TEST(Split, HyperbolicCenterStillSplits) {
  // abelian plane with <e1,e2> = 1 only: both basis lines are isotropic but
  // the plane is not, so e1 + e2 works
  Matrix g(2, 2);
  g.at(0, 1) = g.at(1, 0) = 1;
  auto split = split_off_nonisotropic_center(abelian(3, 2, SymForm{g}));
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->second.dim(), 1);
  EXPECT_TRUE(split->second.form().is_nondegenerate());
}

TEST(CenterPerp, HoldsOnCatalogAlgebras) {
  EXPECT_TRUE(simple3_metric().verify_center_perp());
  EXPECT_TRUE(abelian(3, 4, SymForm::identity(4)).verify_center_perp());
  for (int fc : {1, 2, 3}) EXPECT_TRUE(family_n3(case_params(3, fc)).verify_center_perp());
}

TEST(Invariance, HoldsOnRandomVectors) {
  // Eq-style check: <[x_1..x_n], y> + <x_n, [x_1..x_{n-1}, y]> = 0
  MetricNLie m = family_n3(case_params(3, 3));
  std::mt19937 gen(47);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(random_vector(gen, 6));
    Vector y = random_vector(gen, 6);
    Rational lhs = m.form().eval(m.algebra().eval_multilinear(xs), y);
    std::vector<Vector> tail{xs[0], xs[1], y};
    Rational rhs = m.form().eval(xs[2], m.algebra().eval_multilinear(tail));
    EXPECT_TRUE(is_zero(lhs + rhs));
  }
}

}  // namespace
