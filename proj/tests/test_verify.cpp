#include "nlie/verify.hpp"

#include <gtest/gtest.h>

using namespace nlie;

namespace {

Lemma43Config zero_config(int n) {
  Lemma43Config cfg;
  cfg.n = n;
  cfg.epsilons.assign(n + 1, 1);
  cfg.a1.assign(n + 1, Rational(0));
  cfg.diag.assign(n + 1, Rational(0));
  return cfg;
}

TEST(Lemma43Build, AllZeroConfigIsAbelian) {
  auto [alg, form] = lemma43_build(zero_config(3));
  EXPECT_EQ(alg.dim(), 6);
  EXPECT_TRUE(alg.table().nonzero_ranks().empty());
  EXPECT_TRUE(form.is_nondegenerate());
}

TEST(Lemma43Build, DependentCoefficientsFromFirstRelation) {
  // all eps = +1, every a^1_{i,6} = 1, diagonal coefficients with common
  // constant 1: a^i_{i,6} = (-1)^i
  Lemma43Config cfg = zero_config(3);
  cfg.a1.assign(4, Rational(1));
  for (int i = 2; i <= 5; ++i) cfg.diag[i - 2] = detail::pow_sign(i);
  auto [alg, form] = lemma43_build(cfg);
  // c_{i,j} = a^i_{i,j} e_i + a^j_{i,j} e_j with a^j_{i,j} = -(-1)^{5-j}
  for (int i = 2; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const Vector* v = alg.table().get(detail::range_without(2, 6, {i, j}));
      ASSERT_NE(v, nullptr);
      EXPECT_EQ((*v)[j - 1], Rational(-detail::pow_sign(5 - j)));
      EXPECT_EQ((*v)[i - 1], Rational(-detail::pow_sign(4 - i)));
    }
  EXPECT_TRUE(form.is_nondegenerate());
  EXPECT_TRUE(form.gram().is_symmetric());
}

TEST(Lemma43Build, InconsistentDiagonalRejectedWithPair) {
  Lemma43Config cfg = zero_config(3);
  cfg.diag[0] = 1;  // a^2_{2,6} = 1 but a^3_{3,6} = 0
  try {
    lemma43_build(cfg);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(Lemma43Build, SingleNonzeroA1StaysBelowTheBound) {
  // only a^1_{2,6}: each c_{2,j} contributes e_j and c_{2,6} contributes e_1,
  // so the derived algebra is span{e_1, e_3, e_4, e_5} and never reaches n+2
  Lemma43Config cfg = zero_config(3);
  cfg.a1[0] = 1;
  auto [alg, form] = lemma43_build(cfg);
  Subspace derived = alg.derived_algebra();
  EXPECT_EQ(derived.dim(), 4u);
  EXPECT_TRUE(derived.contains(unit_vector(6, 0)));
  EXPECT_FALSE(derived.contains(unit_vector(6, 1)));
}

TEST(Lemma43Obstruction, ExhaustiveGridAtN3) {
  VerifyReport rep = lemma43_obstruction(3, {rat(-1), rat(0), rat(1)});
  EXPECT_TRUE(rep.pass) << rep.witness.dump();
  EXPECT_EQ(rep.params.at("assignments_checked").get<std::size_t>(), 3888u);
}

TEST(Lemma43Obstruction, EmptyGridRejected) {
  EXPECT_THROW(lemma43_obstruction(3, {}), std::invalid_argument);
}

TEST(Theorem44Suite, SmallScopePasses) {
  SuiteScope scope;
  scope.n_min = 3;
  scope.n_max = 4;
  scope.c_values = {rat(1), rat(-1, 2)};
  scope.sample_count = 4;
  auto reports = verify_theorem44_suite(scope);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.params.dump() << r.witness.dump();
}

TEST(Theorem44Suite, DeterministicAcrossRuns) {
  SuiteScope scope;
  scope.n_min = 4;
  scope.n_max = 4;
  scope.c_values = {rat(1)};
  scope.sample_count = 3;
  auto a = verify_theorem44_suite(scope);
  auto b = verify_theorem44_suite(scope);
  EXPECT_EQ(a, b);
}

TEST(CatalogSoundness, SmallScopePasses) {
  SuiteScope scope;
  scope.n_min = 3;
  scope.n_max = 3;
  auto reports = verify_catalog_soundness(scope);
  // 16 sign patterns, each with a bare algebra and two tail variants
  EXPECT_EQ(reports.size(), 48u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.params.dump() << r.witness.dump();
}

TEST(Lemma41, CatalogMembersPass) {
  std::vector<MetricNLie> members;
  for (int fc : {1, 2, 3}) {
    FamilyParams p;
    p.n = 3;
    p.family_case = fc;
    p.m = p.eps_range().second;
    members.push_back(family_n3(p));
  }
  members.push_back(trivial_extension({3, {1, 1, 1, 1}}, 2, SymForm::identity(2)));
  VerifyReport rep = verify_lemma41(members);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.params.at("algebras").get<int>(), 4);
}

TEST(Lemma41, AbelianInputRejected) {
  std::vector<MetricNLie> members{abelian(3, 6, SymForm::identity(6))};
  EXPECT_THROW(verify_lemma41(members), std::invalid_argument);
}

TEST(Corollary33, DefaultRangesPass) {
  VerifyReport rep = verify_corollary33(3, 10, 20);
  EXPECT_TRUE(rep.pass) << rep.witness.dump();
  EXPECT_THROW(verify_corollary33(3, 2, 20), std::invalid_argument);
}

TEST(Report, JsonRoundTrip) {
  VerifyReport rep;
  rep.claim = "sample";
  rep.params = json{{"n", 3}, {"c", "1/2"}};
  rep.pass = false;
  rep.witness = json{{"check", "whatever"}};
  VerifyReport back = json(rep).get<VerifyReport>();
  EXPECT_EQ(rep, back);

  VerifyReport ok;
  ok.claim = "other";
  ok.pass = true;
  EXPECT_EQ(ok, json(ok).get<VerifyReport>());
}

TEST(SuiteScope, RejectsBadScopes) {
  SuiteScope s;
  s.n_min = 2;
  EXPECT_THROW(verify_theorem44_suite(s), std::invalid_argument);
  s = SuiteScope{};
  s.c_values = {rat(0)};
  EXPECT_THROW(verify_theorem44_suite(s), std::invalid_argument);
  s = SuiteScope{};
  s.c_values.clear();
  EXPECT_THROW(verify_catalog_soundness(s), std::invalid_argument);
}

}  // namespace
