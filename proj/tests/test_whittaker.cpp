#include <gtest/gtest.h>

#include <random>

#include "qwhit/combinatorics/q_analog.hpp"
#include "qwhit/exact/eval.hpp"
#include "qwhit/whittaker/whittaker.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qwhit;

namespace {

PolynomialQ P(const char* s) { return PolynomialQ::parse(s); }

WhittakerValue canonical(const WhittakerValue& f) {
  return f.map_coefficients([](const RationalFunctionQ& c) { return c.canonical(); });
}

WhittakerValue z_sum_over(const PolynomialQ& den) {
  WhittakerValue f(2);
  f.add_term({1, 0}, RationalFunctionQ(P("1"), den));
  f.add_term({0, 1}, RationalFunctionQ(P("1"), den));
  return f;
}

}  // namespace

TEST(PsiDirect, SmallValues) {
  EXPECT_EQ(psi_direct({0, 0}), WhittakerValue::constant(2, 1));
  EXPECT_EQ(canonical(psi_direct({0, 1})), z_sum_over(P("1 - q")));
  EXPECT_TRUE(psi_direct({1, 0}).is_zero());
  EXPECT_EQ(psi_direct({3}), WhittakerValue::monomial({3}, 1));
}

TEST(PsiDirect, MatchesGl2ClosedForm) {
  for (int a = -3; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) EXPECT_EQ(canonical(psi_direct({a, b})), canonical(oracle::gl2_closed_form(a, b)));
  }
}

TEST(PsiDirect, VanishesOffTheCone) {
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    int n = gen::uniform(rng, 2, 4);
    Row p = gen::point(rng, n, -2, 3);
    if (!is_weakly_increasing(p)) EXPECT_TRUE(psi_direct(p).is_zero());
  }
}

TEST(PsiDirect, TranslationCovariance) {
  // Adding 1 to every entry multiplies by z_1 ... z_n.
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    int n = gen::uniform(rng, 1, 3);
    Row p = gen::sorted_point(rng, n, -2, 2);
    Row shifted = p;
    for (int& x : shifted) ++x;
    EXPECT_EQ(canonical(psi_direct(shifted)), canonical(psi_direct(p).times_monomial(Exponent(n, 1))));
  }
}

TEST(PsiDirect, HomogeneousOfDegreeRowSum) {
  WhittakerValue f = psi_direct({-1, 1, 3});
  for (int d : f.total_degrees()) EXPECT_EQ(d, 3);
}

TEST(DeltaFactor, Values) {
  EXPECT_EQ(delta_factor({0, 0}), P("1"));
  EXPECT_EQ(delta_factor({0, 2}), P("1 - q") * P("1 - q^2"));
  EXPECT_EQ(delta_factor({0, 1, 3}), P("1 - q") * P("1 - q") * P("1 - q^2"));
  try {
    delta_factor({1, 0});
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "outside dominant cone");
  }
}

TEST(DeltaPrime, Values) {
  EXPECT_EQ(delta_prime({0, 1}), P("1 - q"));
  EXPECT_TRUE(delta_prime({1, 0}).is_zero());
  EXPECT_EQ(delta_prime({0}), P("1"));
}

TEST(PsiTilde, Values) {
  TildeValue a(2);
  a.add_term({1, 0}, 1);
  a.add_term({0, 1}, 1);
  EXPECT_EQ(psi_tilde({0, 1}), a);
  TildeValue b(2);
  b.add_term({2, 0}, 1);
  b.add_term({1, 1}, P("1 + q"));
  b.add_term({0, 2}, 1);
  EXPECT_EQ(psi_tilde({0, 2}), b);
  EXPECT_TRUE(psi_tilde({1, 0}).is_zero());
}

TEST(PsiTilde, EqualsDeltaTimesPsiWithNaturalCoefficients) {
  std::mt19937 rng(14);
  for (int i = 0; i < 30; ++i) {
    int n = gen::uniform(rng, 1, 4);
    Row p = gen::sorted_point(rng, n, 0, 3);
    TildeValue t = psi_tilde(p);
    WhittakerValue lifted = t.map_coefficients([](const PolynomialQ& c) { return RationalFunctionQ(c); });
    WhittakerValue scaled = psi_direct(p);
    scaled *= RationalFunctionQ(delta_factor(p));
    EXPECT_EQ(canonical(scaled), lifted);
    for (const auto& [e, c] : t.terms()) {
      for (const auto& a : c.coeffs()) {
        EXPECT_EQ(a.get_den(), 1);
        EXPECT_GE(sgn(a), 0);
      }
    }
  }
}

TEST(PsiDirect, AtQZeroCountsPatterns) {
  Row p{0, 1, 3};
  Rational patterns(static_cast<long>(enumerate_gz(p).size()));
  const Laurent<Rational> at_zero = eval_at_q(psi_direct(p), Rational(0));
  Rational total = 0;
  for (const auto& [e, c] : at_zero.terms()) total += c;
  EXPECT_EQ(total, patterns);
}

TEST(KernelQ, Values) {
  EXPECT_EQ(kernel_q({0, 1}, {0}).canonical(), RationalFunctionQ(P("1"), P("1 - q")).canonical());
  EXPECT_TRUE(kernel_q({0, 1}, {2}).is_zero());
  EXPECT_EQ(kernel_q({0, 0}, {0}), RationalFunctionQ(1));
}

TEST(PsiRecursive, BaseCaseAndAgreement) {
  EXPECT_EQ(psi_recursive({3}), WhittakerValue::monomial({3}, 1));
  EXPECT_EQ(canonical(psi_recursive({0, 1})), z_sum_over(P("1 - q")));
  EXPECT_EQ(canonical(psi_recursive({0, 0, 0})), canonical(psi_direct({0, 0, 0})));
}

TEST(PsiRecursive, AgreesWithPatternSumOnRandomPoints) {
  std::mt19937 rng(15);
  for (int i = 0; i < 40; ++i) {
    int n = gen::uniform(rng, 1, 4);
    Row p = gen::point(rng, n, -2, 3);
    EXPECT_EQ(canonical(psi_recursive(p)), canonical(psi_direct(p)));
  }
}

TEST(PsiRecursive, MemoizesPerInstance) {
  WhittakerRecursion rec;
  rec({0, 1, 2});
  std::size_t after_first = rec.memo_size();
  EXPECT_GT(after_first, 0u);
  rec({0, 1, 2});
  EXPECT_EQ(rec.memo_size(), after_first);
}
