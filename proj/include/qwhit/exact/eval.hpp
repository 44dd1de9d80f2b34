#pragma once

#include "qwhit/exact/laurent.hpp"
#include "qwhit/exact/poly_q.hpp"
#include "qwhit/exact/ratfun_q.hpp"

namespace qwhit {

inline Rational eval_at_q(const PolynomialQ& p, const Rational& q0) { return p(q0); }
inline Rational eval_at_q(const RationalFunctionQ& r, const Rational& q0) { return r(q0); }

/// Coefficient-wise substitution q = q0. Throws on a pole like the scalar
/// version.
template <class C>
Laurent<Rational> eval_at_q(const Laurent<C>& f, const Rational& q0) {
  return f.map_coefficients([&](const C& c) { return eval_at_q(c, q0); });
}

/// Integer-valued view of a Laurent polynomial whose coefficients are
/// integers; throws std::domain_error otherwise.
Laurent<Integer> to_integer_laurent(const Laurent<Rational>& f);

}  // namespace qwhit
