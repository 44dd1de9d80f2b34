#pragma once

#include <ostream>
#include <string>

#include "qwhit/exact/poly_q.hpp"

namespace qwhit {

/// Element of Q(q), kept as numerator / denominator.
///
/// Arithmetic does not reduce by the gcd: sums reuse the least common
/// multiple of the denominators, products just multiply. Reduction happens
/// in canonical(), in division, and in str(). Equality is decided by
/// cross-multiplication, so unreduced values compare correctly.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : den_(1) {}
  RationalFunctionQ(const PolynomialQ& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunctionQ(const Rational& c) : num_(c), den_(1) {}     // NOLINT
  RationalFunctionQ(long c) : num_(c), den_(1) {}                // NOLINT
  /// Throws std::domain_error("division by zero polynomial") if den is zero.
  RationalFunctionQ(PolynomialQ num, PolynomialQ den);

  /// 1 - q^m for any integer m.
  static RationalFunctionQ one_minus_q_pow(int m);
  /// q^m for any integer m.
  static RationalFunctionQ q_pow(int m);

  const PolynomialQ& numerator() const { return num_; }
  const PolynomialQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  /// Coprime numerator and denominator, both with integer coefficients,
  /// jointly content-free, the lowest nonzero coefficient of the
  /// denominator positive, so 1/(1-q) rather than -1/(q-1).
  RationalFunctionQ canonical() const;

  RationalFunctionQ& operator+=(const RationalFunctionQ& o);
  RationalFunctionQ& operator-=(const RationalFunctionQ& o);
  RationalFunctionQ& operator*=(const RationalFunctionQ& o);
  RationalFunctionQ& operator/=(const RationalFunctionQ& o);

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  RationalFunctionQ operator-() const { return {-num_, den_}; }

  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b);

  /// Exact value at q = q0; throws std::domain_error("pole at q0 = ...")
  /// when the reduced denominator vanishes there.
  Rational operator()(const Rational& q0) const;

  /// Canonical "num / den" rendering ("num" alone when den is 1).
  std::string str() const;

 private:
  PolynomialQ num_;
  PolynomialQ den_;
};

inline bool is_zero(const RationalFunctionQ& r) { return r.is_zero(); }

/// Canonical form of r (value unchanged).
inline RationalFunctionQ ratfun_normalize(const RationalFunctionQ& r) { return r.canonical(); }

std::ostream& operator<<(std::ostream& os, const RationalFunctionQ& r);

}  // namespace qwhit
