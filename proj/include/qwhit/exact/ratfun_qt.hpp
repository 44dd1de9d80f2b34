#pragma once

#include <ostream>
#include <string>

#include "qwhit/exact/poly_qt.hpp"
#include "qwhit/exact/ratfun_q.hpp"

namespace qwhit {

/// Element of Q(q,t). Unlike RationalFunctionQ this type is reduced after
/// every operation; the Macdonald computations it serves are small and
/// bivariate expressions grow quickly when left unreduced.
class RationalFunctionQT {
 public:
  RationalFunctionQT() : den_(1) {}
  RationalFunctionQT(const PolynomialQT& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunctionQT(const Rational& c) : num_(c), den_(1) {}      // NOLINT
  RationalFunctionQT(long c) : num_(c), den_(1) {}                 // NOLINT
  RationalFunctionQT(const RationalFunctionQ& r);                  // NOLINT
  RationalFunctionQT(PolynomialQT num, PolynomialQT den);

  const PolynomialQT& numerator() const { return num_; }
  const PolynomialQT& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionQT& operator+=(const RationalFunctionQT& o);
  RationalFunctionQT& operator-=(const RationalFunctionQT& o);
  RationalFunctionQT& operator*=(const RationalFunctionQT& o);
  RationalFunctionQT& operator/=(const RationalFunctionQT& o);
  friend RationalFunctionQT operator+(RationalFunctionQT a, const RationalFunctionQT& b) { return a += b; }
  friend RationalFunctionQT operator-(RationalFunctionQT a, const RationalFunctionQT& b) { return a -= b; }
  friend RationalFunctionQT operator*(RationalFunctionQT a, const RationalFunctionQT& b) { return a *= b; }
  friend RationalFunctionQT operator/(RationalFunctionQT a, const RationalFunctionQT& b) { return a /= b; }
  RationalFunctionQT operator-() const;
  RationalFunctionQT pow(int k) const;

  friend bool operator==(const RationalFunctionQT& a, const RationalFunctionQT& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Specialization t = q; throws if the denominator vanishes there.
  RationalFunctionQ at_t_equals_q() const;

  std::string str() const;

 private:
  void reduce();
  PolynomialQT num_;
  PolynomialQT den_;
};

inline bool is_zero(const RationalFunctionQT& r) { return r.is_zero(); }

std::ostream& operator<<(std::ostream& os, const RationalFunctionQT& r);

}  // namespace qwhit
