#include <gtest/gtest.h>

#include <random>

#include "qwhit/combinatorics/gz.hpp"
#include "qwhit/combinatorics/q_analog.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qwhit;

namespace {
PolynomialQ P(const char* s) { return PolynomialQ::parse(s); }
}  // namespace

TEST(QFactorial, SmallValues) {
  EXPECT_EQ(q_factorial(0), P("1"));
  EXPECT_EQ(q_factorial(1), P("1 - q"));
  EXPECT_EQ(q_factorial(3), P("1 - q") * P("1 - q^2") * P("1 - q^3"));
  EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QFactorial, RecurrenceHolds) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(q_factorial(n), q_factorial(n - 1) * PolynomialQ::one_minus_q_pow(n));
}

TEST(QBinomial, SmallValues) {
  EXPECT_EQ(q_binomial(2, 1), P("1 + q"));
  EXPECT_EQ(q_binomial(4, 2), P("1 + q + 2*q^2 + q^3 + q^4"));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_binomial(n, 0), P("1"));
  EXPECT_TRUE(q_binomial(3, 4).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
}

TEST(QBinomial, PascalSymmetryAndFactorialQuotient) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
      if (n >= 1) {
        PolynomialQ rhs = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k);
        EXPECT_EQ(q_binomial(n, k), rhs) << n << " " << k;
      }
      if (k >= 0 && k <= n) {
        EXPECT_EQ(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k), q_factorial(n));
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        EXPECT_EQ(q_binomial(n, k)(Rational(1)), Rational(b));
        const PolynomialQ binom = q_binomial(n, k);
        for (const auto& c : binom.coeffs()) EXPECT_GE(sgn(c), 0);
      }
    }
  }
}

TEST(Theta, Gate) {
  EXPECT_EQ(theta(0), 1);
  EXPECT_EQ(theta(-1), 0);
  EXPECT_EQ(theta(5), 1);
}

TEST(GZ, PatternCounts) {
  EXPECT_EQ(enumerate_gz({0, 1}).size(), 2u);
  EXPECT_EQ(enumerate_gz({0, 1, 2}).size(), 8u);
  EXPECT_EQ(enumerate_gz({0, 0, 0}).size(), 1u);
  EXPECT_TRUE(enumerate_gz({1, 0}).empty());
}

TEST(GZ, CountMatchesWeylDimension) {
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    int n = gen::uniform(rng, 1, 4);
    Row top = gen::sorted_point(rng, n, -2, 3);
    EXPECT_EQ(Integer(enumerate_gz(top).size()), oracle::weyl_dimension(top));
  }
}

TEST(GZ, PatternsAreValidDistinctAndOrdered) {
  auto pats = enumerate_gz({-1, 1, 2, 2});
  for (std::size_t i = 0; i < pats.size(); ++i) {
    EXPECT_TRUE(GZPattern::valid(pats[i].rows()));
    EXPECT_EQ(pats[i].top(), (Row{-1, 1, 2, 2}));
    if (i > 0) {
      std::vector<Row> a(pats[i - 1].rows().rbegin(), pats[i - 1].rows().rend());
      std::vector<Row> b(pats[i].rows().rbegin(), pats[i].rows().rend());
      EXPECT_LT(a, b);
    }
  }
}

TEST(GZ, StreamMatchesVector) {
  GZPatternStream s({0, 2, 3});
  std::vector<GZPattern> streamed;
  while (auto p = s.next()) streamed.push_back(*p);
  EXPECT_EQ(streamed, enumerate_gz({0, 2, 3}));
}

TEST(GZ, RowSums) {
  GZPattern p({{1}, {0, 2}});
  EXPECT_EQ(p.row_sum(0), 0);
  EXPECT_EQ(p.row_sum(1), 1);
  EXPECT_EQ(p.row_sum(2), 2);
  EXPECT_THROW(GZPattern({{3}, {0, 2}}), std::invalid_argument);
}

TEST(Interlacing, SmallCases) {
  EXPECT_EQ(enumerate_interlacing({0, 1}), (std::vector<Row>{{0}, {1}}));
  EXPECT_EQ(enumerate_interlacing({0, 2}), (std::vector<Row>{{0}, {1}, {2}}));
  EXPECT_EQ(enumerate_interlacing({0, 1, 2}), (std::vector<Row>{{0, 1}, {0, 2}, {1, 1}, {1, 2}}));
  EXPECT_TRUE(enumerate_interlacing({2, 1}).empty());
}

TEST(Partitions, AscendingDescendingInverse) {
  EXPECT_EQ(to_descending({0, 1, 3}), (Row{3, 1, 0}));
  EXPECT_EQ(to_ascending(to_descending({0, 1, 3})), (Row{0, 1, 3}));
}
