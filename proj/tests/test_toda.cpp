#include <gtest/gtest.h>

#include <random>

#include "qwhit/toda/operators.hpp"
#include "support/generators.hpp"

using namespace qwhit;

namespace {

RationalFunctionQ one_minus_q(int m) { return RationalFunctionQ::one_minus_q_pow(m); }

const OperatorTerm& term_with_shift(const DifferenceOperator& op, const Exponent& shift) {
  for (const auto& t : op.terms) {
    if (t.shift == shift) return t;
  }
  throw std::runtime_error("no such shift");
}

LatticeFunction::Value scalar(long c) { return LatticeFunction::Value::constant(0, RationalFunctionQ(c)); }

// Table with random integer values in [-3, 3] on the given points.
LatticeFunction random_table(std::mt19937& rng, std::size_t rank, const std::vector<Row>& points) {
  LatticeFunction::Table t;
  for (const auto& p : points) t.emplace(p, scalar(gen::uniform(rng, -3, 3)));
  return LatticeFunction::from_table(rank, 0, t);
}

std::vector<Row> grid(int n, int lo, int hi, bool sorted, bool reflected_sorted) {
  std::vector<Row> out;
  Row p(n, lo);
  while (true) {
    Row neg = p;
    for (int& x : neg) x = -x;
    if ((!sorted || is_weakly_increasing(p)) && (!reflected_sorted || is_weakly_increasing(neg))) out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

}  // namespace

TEST(Subsets, LexicographicOrder) {
  EXPECT_EQ(ordered_subsets(3, 2), (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(ordered_subsets(2, 0), (std::vector<std::vector<int>>{{}}));
}

TEST(Hamiltonian, RankTwoCoefficients) {
  DifferenceOperator h1 = build_H(1, 2);
  ASSERT_EQ(h1.terms.size(), 2u);
  EXPECT_EQ(term_with_shift(h1, {1, 0}).coefficient({0, 0}), RationalFunctionQ(1));
  EXPECT_EQ(term_with_shift(h1, {0, 1}).coefficient({0, 0}), one_minus_q(1));
  EXPECT_EQ(term_with_shift(h1, {0, 1}).coefficient({2, 5}), one_minus_q(4));
  DifferenceOperator h2 = build_H(2, 2);
  ASSERT_EQ(h2.terms.size(), 1u);
  EXPECT_EQ(h2.terms[0].shift, (Exponent{1, 1}));
  EXPECT_EQ(h2.terms[0].coefficient({3, -1}), RationalFunctionQ(1));
}

TEST(Hamiltonian, TopRankIsPureShift) {
  for (int n = 1; n <= 4; ++n) {
    DifferenceOperator h = build_H(n, n);
    ASSERT_EQ(h.terms.size(), 1u);
    EXPECT_TRUE(h.terms[0].factors.empty());
  }
}

TEST(Hamiltonian, RankOutOfRangeThrows) {
  EXPECT_THROW(build_H(0, 2), std::out_of_range);
  EXPECT_THROW(build_H(3, 2), std::out_of_range);
  EXPECT_THROW(build_J(3, 2), std::out_of_range);
  EXPECT_THROW(build_H_tilde(4, 2), std::out_of_range);
}

TEST(HamiltonianTilde, EdgeRanks) {
  DifferenceOperator id = build_H_tilde(0, 2);
  ASSERT_EQ(id.terms.size(), 1u);
  EXPECT_EQ(id.terms[0].shift, (Exponent{0, 0}));
  EXPECT_TRUE(build_H_tilde(3, 2).terms.empty());
}

TEST(Apply, ZeroAndPureShift) {
  LatticeFunction zero = LatticeFunction::from_table(2, 0, {});
  EXPECT_TRUE(apply(build_H(1, 2), zero, {0, 0}).is_zero());
  LatticeFunction::Table t;
  t.emplace(Row{1, 1}, scalar(5));
  LatticeFunction f = LatticeFunction::from_table(2, 0, t);
  EXPECT_EQ(apply(build_H(2, 2), f, {0, 0}), scalar(5));
  EXPECT_EQ(apply(build_h(2, 2), f, {0, 0}), scalar(5));
}

TEST(LatticeFunction, TableDropsZerosAndRejectsWrongRank) {
  LatticeFunction::Table t;
  t.emplace(Row{0, 0}, scalar(0));
  t.emplace(Row{0, 1}, scalar(2));
  auto f = LatticeFunction::from_table(2, 0, t);
  EXPECT_EQ(f.support()->size(), 1u);
  LatticeFunction::Table bad;
  bad.emplace(Row{0}, scalar(1));
  EXPECT_THROW(LatticeFunction::from_table(2, 0, bad), std::invalid_argument);
}

TEST(ElementarySymmetric, Values) {
  using L = Laurent<Integer>;
  L z1 = L::variable(2, 0), z2 = L::variable(2, 1);
  EXPECT_EQ(elementary_symmetric<Integer>(1, 2), z1 + z2);
  EXPECT_EQ(elementary_symmetric<Integer>(0, 2), L::constant(2, 1));
  EXPECT_EQ(elementary_symmetric<Integer>(2, 3).size(), 3u);
  EXPECT_TRUE(elementary_symmetric<Integer>(3, 2).is_zero());
}

TEST(Eigen, SpecExamples) {
  EXPECT_TRUE(eigencheck(1, {0, 0}).pass);
  EXPECT_TRUE(eigencheck(2, {0, 0}).pass);
  EXPECT_TRUE(eigencheck(2, {0, 1, 2}).pass);
}

TEST(Eigen, RandomPointsIncludingOffCone) {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    int n = gen::uniform(rng, 1, 4);
    Row p = gen::point(rng, n, -2, 3);
    int r = gen::uniform(rng, 1, n);
    EXPECT_TRUE(eigencheck(r, p).pass) << r;
  }
}

TEST(Eigen, DetectsAWrongFunction) {
  // A table equal to psi on the cone except at one point fails nearby.
  LatticeFunction psi = psi_function(2);
  LatticeFunction broken = LatticeFunction::from_rule(2, 2, [psi](const LatticePoint& p) {
    auto v = psi(p);
    if (p == LatticePoint{1, 1}) v = v + v;
    return v;
  });
  EXPECT_FALSE(eigencheck(1, {0, 1}, broken).pass);
  EXPECT_FALSE(eigencheck(1, {0, 1}, broken).residual.is_null());
}

TEST(Conjugated, JOnPsiTildeAndTermwiseIdentity) {
  std::mt19937 rng(32);
  for (int i = 0; i < 40; ++i) {
    int n = gen::uniform(rng, 1, 3);
    Row p = gen::sorted_point(rng, n, 0, 3);
    int r = gen::uniform(rng, 1, n);
    EXPECT_TRUE(j_eigencheck(r, p).pass);
  }
  EXPECT_TRUE(conjugation_check(1, {0, 1, 3}).pass);
  EXPECT_TRUE(conjugation_check(2, {-1, 1, 2}).pass);
}

TEST(Commutativity, OnPsiAndOnRandomTables) {
  std::mt19937 rng(33);
  LatticeFunction psi = psi_function(3);
  EXPECT_TRUE(commutativity_check(1, 2, {0, 1, 1}, psi).pass);
  LatticeFunction f = random_table(rng, 3, grid(3, -1, 2, false, false));
  for (const auto& p : grid(3, -1, 1, false, false)) EXPECT_TRUE(commutativity_check(1, 2, p, f).pass);
}

TEST(Intertwine, SpecExamples) {
  EXPECT_TRUE(intertwine_check(1, {0, 1}, {0}).pass);
  EXPECT_TRUE(intertwine_check(2, {0, 1}, {1}).pass);
  EXPECT_TRUE(intertwine_check(2, {0, 1, 2}, {0, 2}).pass);
}

TEST(Intertwine, RandomPairs) {
  std::mt19937 rng(34);
  for (int i = 0; i < 200; ++i) {
    int ell = gen::uniform(rng, 1, 3);
    Row upper = gen::point(rng, ell + 1, -1, 3);
    Row lower = gen::point(rng, ell, -1, 3);
    int k = gen::uniform(rng, 1, ell + 1);
    EXPECT_TRUE(intertwine_check(k, upper, lower).pass);
  }
}

TEST(Adjoint, IndicatorAndOffConeExamples) {
  LatticeFunction::Table t;
  t.emplace(Row{0, 1}, scalar(1));
  auto ind = LatticeFunction::from_table(2, 0, t);
  EXPECT_TRUE(adjoint_check(ind, ind, 1).pass);
  EXPECT_TRUE(lattice_pairing(ind, ind).is_zero());
}

TEST(Adjoint, RandomConeSupportedFunctions) {
  std::mt19937 rng(35);
  for (int ell = 1; ell <= 3; ++ell) {
    for (int trial = 0; trial < 5; ++trial) {
      LatticeFunction f = random_table(rng, ell, grid(ell, -3, 3, false, true));
      LatticeFunction g = random_table(rng, ell, grid(ell, -3, 3, true, false));
      for (int r = 1; r <= ell; ++r) EXPECT_TRUE(adjoint_check(f, g, r).pass) << ell << " " << r;
    }
  }
}

TEST(Adjoint, FailsForGeneralSupport) {
  // The identity needs f on the reflected cone and g on the cone; with
  // unrestricted supports boundary terms survive.
  std::mt19937 rng(36);
  int failures = 0;
  for (int trial = 0; trial < 10; ++trial) {
    LatticeFunction f = random_table(rng, 2, grid(2, -1, 3, false, false));
    LatticeFunction g = random_table(rng, 2, grid(2, -1, 3, false, false));
    failures += !adjoint_check(f, g, 1).pass;
  }
  EXPECT_GT(failures, 0);
}

TEST(Describe, MentionsNameAndShifts) {
  std::string d = build_H(1, 2).describe();
  EXPECT_NE(d.find("H"), std::string::npos);
}
