#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qwhit/toda/lattice_function.hpp"

namespace qwhit {

/// The factor 1 - q^{<linear, p> + offset} of an operator coefficient.
struct QPowerFactor {
  std::vector<int> linear;
  int offset = 0;

  int exponent(const LatticePoint& p) const;
};

struct OperatorTerm {
  Exponent shift;
  std::vector<QPowerFactor> factors;

  RationalFunctionQ coefficient(const LatticePoint& p) const;
};

/// (Af)(p) = sum over terms of coefficient(p) * f(p + shift).
struct DifferenceOperator {
  std::string name;
  std::size_t rank = 0;
  std::vector<OperatorTerm> terms;

  std::string describe() const;
};

/// Ordered r-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> ordered_subsets(int n, int r);

/// q-Toda Hamiltonian on Z^n, 1 <= r <= n.
DifferenceOperator build_H(int r, int n);
/// Adjoint family acting on reflected points, 0 <= r <= n + 1. r = 0 is
/// the identity and r = n + 1 the zero operator.
DifferenceOperator build_H_tilde(int r, int n);
/// Conjugate of H_r by the cone normalizer Delta, 1 <= r <= n.
DifferenceOperator build_J(int r, int n);
/// Pure shift of the last r coordinates, 1 <= r <= n.
DifferenceOperator build_h(int r, int n);

LatticeFunction::Value apply(const DifferenceOperator& op, const LatticeFunction& f, const LatticePoint& p);
/// op applied to f as a new (uncached) lattice function.
LatticeFunction apply(const DifferenceOperator& op, const LatticeFunction& f);

/// e_r(z_1..z_n); e_0 = 1 and e_r = 0 for r > n.
template <class C>
Laurent<C> elementary_symmetric(int r, int n) {
  Laurent<C> out(n);
  if (r < 0 || r > n) return out;
  for (const auto& subset : ordered_subsets(n, r)) {
    Exponent e(n, 0);
    for (int i : subset) e[i - 1] = 1;
    out.add_term(e, C(1));
  }
  return out;
}

struct CheckResult {
  bool pass = true;
  nlohmann::json residual;  // null on pass
  std::string detail;
};

/// H_r psi = e_r(z) psi at p. psi defaults to the cached psi_direct.
CheckResult eigencheck(int r, const LatticePoint& p);
CheckResult eigencheck(int r, const LatticePoint& p, const LatticeFunction& psi);

/// J_r psi_tilde = e_r(z) psi_tilde at p.
CheckResult j_eigencheck(int r, const LatticePoint& p);
CheckResult j_eigencheck(int r, const LatticePoint& p, const LatticeFunction& psi_tilde);

/// Term-by-term J_r Delta = Delta H_r at a strictly increasing p.
CheckResult conjugation_check(int r, const LatticePoint& p);

/// H_r H_s f = H_s H_r f at p.
CheckResult commutativity_check(int r, int s, const LatticePoint& p, const LatticeFunction& f);

/// H_k acting on the upper argument of the kernel against H~_{k-1} + H~_k
/// acting on the reflected lower argument, at (upper, lower).
CheckResult intertwine_check(int k, const LatticePoint& upper, const LatticePoint& lower);

/// Lattice pairing <f, g> = sum_p Delta'(p) f(-p) g(p) for table functions.
LatticeFunction::Value lattice_pairing(const LatticeFunction& f, const LatticeFunction& g);

/// <f, H_r g> = <H~_r f, g> for table functions f, g of the same rank.
CheckResult adjoint_check(const LatticeFunction& f, const LatticeFunction& g, int r);

}  // namespace qwhit
