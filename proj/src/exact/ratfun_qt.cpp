#include "qwhit/exact/ratfun_qt.hpp"

#include <stdexcept>
#include <utility>

namespace qwhit {

RationalFunctionQT::RationalFunctionQT(const RationalFunctionQ& r)
    : num_(r.numerator()), den_(r.denominator()) {
  reduce();
}

RationalFunctionQT::RationalFunctionQT(PolynomialQT num, PolynomialQT den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  reduce();
}

void RationalFunctionQT::reduce() {
  if (num_.is_zero()) {
    den_ = PolynomialQT(1);
    return;
  }
  PolynomialQT g = poly_gcd(num_, den_);
  if (!(g == PolynomialQT(1))) {
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  Integer l = num_.denominator_lcm();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den_.denominator_lcm().get_mpz_t());
  Integer c = (num_ * Rational(l)).integer_content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), (den_ * Rational(l)).integer_content().get_mpz_t());
  Rational scale(l, c);
  scale.canonicalize();
  if (sgn(den_.terms().begin()->second) < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
}

RationalFunctionQT& RationalFunctionQT::operator+=(const RationalFunctionQT& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RationalFunctionQT& RationalFunctionQT::operator-=(const RationalFunctionQT& o) { return *this += -o; }

RationalFunctionQT& RationalFunctionQT::operator*=(const RationalFunctionQT& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunctionQT& RationalFunctionQT::operator/=(const RationalFunctionQT& o) {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

RationalFunctionQT RationalFunctionQT::operator-() const {
  RationalFunctionQT r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionQT RationalFunctionQT::pow(int k) const {
  RationalFunctionQT base = k < 0 ? RationalFunctionQT(1) / *this : *this;
  RationalFunctionQT r(1);
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

RationalFunctionQ RationalFunctionQT::at_t_equals_q() const {
  PolynomialQ d = den_.at_t_equals_q();
  if (d.is_zero()) throw std::domain_error("pole at t = q");
  return RationalFunctionQ(num_.at_t_equals_q(), d).canonical();
}

std::string RationalFunctionQT::str() const {
  if (den_ == PolynomialQT(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunctionQT& r) { return os << r.str(); }

}  // namespace qwhit
