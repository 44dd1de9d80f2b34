#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "qwhit/combinatorics/gz.hpp"
#include "qwhit/exact/laurent.hpp"
#include "qwhit/exact/poly_q.hpp"
#include "qwhit/exact/ratfun_q.hpp"

namespace qwhit {

using LatticePoint = Row;
using WhittakerValue = Laurent<RationalFunctionQ>;
using TildeValue = Laurent<PolynomialQ>;

inline bool is_dominant(const LatticePoint& p) { return is_weakly_increasing(p); }

/// z-exponent vector of a pattern: entry k is s_k - s_{k-1}, s_k the sum
/// of row k.
Exponent pattern_weight(const GZPattern& pat);

/// Sum over Gelfand-Zetlin patterns with top row p of the pattern weight
/// times a ratio of q-factorials. Zero when p is not weakly increasing.
WhittakerValue psi_direct(const LatticePoint& p);

/// Product of (p_{j+1} - p_j)_q! over adjacent entries. Throws
/// std::domain_error("outside dominant cone") for unsorted p.
PolynomialQ delta_factor(const LatticePoint& p);

/// delta_factor(p) * psi_direct(p), computed independently as a sum of
/// products of Gaussian binomials. Coefficients lie in N[q].
TildeValue psi_tilde(const LatticePoint& p);

/// Lattice kernel between a row of length l+1 and a row of length l;
/// zero unless they interlace.
RationalFunctionQ kernel_q(const LatticePoint& upper, const LatticePoint& lower);

/// delta_factor with a Theta gate: zero off the cone instead of throwing.
PolynomialQ delta_prime(const LatticePoint& p);

/// Rank-by-rank construction of Psi from the rank-1 value z1^p through the
/// kernel. Values are memoized per lattice point (the rank is the point's
/// length) in that rank's own variables; lookups are safe from several
/// threads.
class WhittakerRecursion {
 public:
  WhittakerValue operator()(const LatticePoint& p);
  std::size_t memo_size() const;

 private:
  WhittakerValue compute(const LatticePoint& p);
  mutable std::shared_mutex mutex_;
  std::map<LatticePoint, WhittakerValue> memo_;
};

/// Uses a process-wide WhittakerRecursion.
WhittakerValue psi_recursive(const LatticePoint& p);

}  // namespace qwhit
