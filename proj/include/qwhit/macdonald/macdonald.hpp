#pragma once

#include <map>
#include <vector>

#include "qwhit/combinatorics/gz.hpp"
#include "qwhit/exact/laurent.hpp"
#include "qwhit/exact/ratfun_qt.hpp"
#include "qwhit/toda/operators.hpp"

namespace qwhit {

/// Polynomial in x_1..x_n over Q(q,t).
using SymmetricPolynomial = Laurent<RationalFunctionQT>;

/// Coordinates in the monomial basis of the ring of symmetric functions,
/// keyed by partitions written in descending order without zeros.
using SymCoords = std::map<Row, RationalFunctionQT>;

/// Partitions of d in descending notation, reverse lexicographic from (d)
/// down to (1^d). The order refines dominance.
std::vector<Row> partitions(int d);

/// Strips zeros and sorts descending.
Row descending_partition(const Row& ascending);

/// Monomial symmetric polynomial: each distinct rearrangement of the
/// exponent tuple appears once. Throws when the partition has more
/// nonzero parts than n.
SymmetricPolynomial monomial_sym(const Row& ascending, std::size_t n);

/// Product of power sums p_{L_1} p_{L_2} ... (zero parts skipped).
SymmetricPolynomial power_sum_product(const Row& ascending, std::size_t n);

/// z_L(q,t) for a partition L.
RationalFunctionQT z_qt(const Row& partition);

/// Power-sum coordinates of a symmetric function given in the m-basis.
SymCoords power_sum_coordinates(const SymCoords& m_coords);

/// Scalar product of two homogeneous symmetric functions of equal degree
/// in m-basis coordinates.
RationalFunctionQT inner_product_coords(const SymCoords& a, const SymCoords& b);

/// Scalar product of symmetric polynomials in n variables. Both must be
/// homogeneous of one degree d <= degree_bound; d > n throws because
/// n-variable polynomials no longer determine their power-sum expansion.
RationalFunctionQT inner_product_qt(const SymmetricPolynomial& f, const SymmetricPolynomial& g, std::size_t n,
                                    int degree_bound);

/// m-basis coordinates of a symmetric polynomial in n variables.
SymCoords monomial_coordinates(const SymmetricPolynomial& f);

/// Macdonald polynomial as a symmetric function, normalized so the
/// coefficient of m_L is 1.
SymCoords macdonald_coords(const Row& ascending);

/// Macdonald polynomial restricted to n variables.
SymmetricPolynomial macdonald_poly(const Row& ascending, std::size_t n);

SymmetricPolynomial restrict_to(const SymCoords& coords, std::size_t n);

/// Macdonald-Ruijsenaars operator of rank r applied to f. The result is
/// computed as (V * H_r f) / V with V the Vandermonde product, dividing one
/// linear factor at a time; a nonzero remainder throws std::logic_error.
SymmetricPolynomial macdonald_operator_apply(int r, std::size_t n, const SymmetricPolynomial& f);

/// Sum over r-subsets of prod q^{lambda_i} t^{n-i}, lambda sorted
/// descending (largest part with the highest power of t).
RationalFunctionQT macdonald_eigenvalue(const Row& ascending, int r, std::size_t n);

struct MacdonaldEigenResult {
  CheckResult check;
  RationalFunctionQT measured;
  RationalFunctionQT predicted;
};

/// H_r P_L = c P_L with c measured at the leading monomial and compared
/// with macdonald_eigenvalue.
MacdonaldEigenResult macdonald_eigencheck(const Row& ascending, int r, std::size_t n);

/// The measured eigenvalues c_1..c_n of P_L are the elementary symmetric
/// functions of q^{L_s(i)} t^{n-i} for a pairing s fixed by c_1 alone.
CheckResult generating_series_check(const Row& ascending, std::size_t n);

/// Every pair of Macdonald polynomials of degree d with at most max_parts
/// parts is orthogonal.
CheckResult orthogonality_check(int d, std::size_t max_parts);

/// P_L at t = q against char_gz.
CheckResult schur_specialization_check(const Row& ascending, std::size_t n);

}  // namespace qwhit
