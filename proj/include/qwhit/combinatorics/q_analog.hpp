#pragma once

#include "qwhit/exact/poly_q.hpp"

namespace qwhit {

/// (1-q)(1-q^2)...(1-q^n); throws std::invalid_argument for n < 0.
/// Values are cached process-wide.
PolynomialQ q_factorial(int n);

/// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
PolynomialQ q_binomial(int n, int k);

/// 1 for n >= 0, else 0.
inline int theta(int n) { return n >= 0 ? 1 : 0; }

}  // namespace qwhit
