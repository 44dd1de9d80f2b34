#pragma once

#include "qwhit/toda/operators.hpp"

namespace qwhit {

using Character = Laurent<Integer>;

/// Sum of pattern weights over all patterns with the given top row; zero
/// for an unsorted row.
Character char_gz(const Row& top);

/// Psi at q = 0 against char_gz.
CheckResult q0_limit_check(const LatticePoint& p);

/// e_r * chi_top = sum over r-subsets I of chi_{top + e_I}.
CheckResult pieri_check(int r, const Row& top);

/// chi_top(z_1..z_n) = sum over interlacing mu of z_n^{|top|-|mu|} chi_mu(z_1..z_{n-1}).
CheckResult branching_check(const Row& top);

/// prod_{i<=n, j<=m} 1/(1 - x_i y_j) against sum_L chi_L(x) chi_L(y), both
/// cut at x-degree D (the y-degree of every term equals its x-degree).
CheckResult cauchy_check(int n, int m, int degree_bound);

/// Recovers chi_top(x) as a constant term in y_1..y_{n-1} of the truncated
/// kernel prod 1/(1 - x_i/y_j) times chi_mu(y) prod_{i!=j}(1 - y_i/y_j),
/// divided by (n-1)!. mu is the top row without its first entry after the
/// common power (x_1..x_n)^{top_1} is split off. The kernel is expanded to
/// x-degree degree_bound, which must be at least |top| - n*top_1.
Character constant_term_character(const Row& top, int degree_bound);
CheckResult constant_term_branching(const Row& top, int degree_bound);

/// Product of fundamental characters: e_n^{p_1} prod_i e_{n-i}^{p_{i+1}-p_i}.
/// Zero for unsorted p.
Character psi_q1(const LatticePoint& p);

/// psi_tilde at q = 1 against psi_q1.
CheckResult q1_limit_check(const LatticePoint& p);
/// Shift of the last r coordinates acts on psi_q1 as multiplication by e_r.
CheckResult h_eigencheck(int r, const LatticePoint& p);
/// Binomial recursion for psi_q1 and the factorial recursion for
/// psi_q1 / prod (gap)!, both one rank down.
CheckResult q1_recursion_check(const LatticePoint& p);
/// psi_q1 at z = (1..1) against prod_i C(n, n-i)^{p_{i+1}-p_i}.
CheckResult dimension_check(const LatticePoint& p);

Laurent<Rational> to_rational(const Character& c);
Integer evaluate_at_ones(const Character& c);

}  // namespace qwhit
