#include "qwhit/exact/ratfun_q.hpp"

#include <stdexcept>
#include <utility>

namespace qwhit {

RationalFunctionQ::RationalFunctionQ(PolynomialQ num, PolynomialQ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num_.is_zero()) den_ = PolynomialQ(1);
}

RationalFunctionQ RationalFunctionQ::one_minus_q_pow(int m) {
  if (m >= 0) return PolynomialQ::one_minus_q_pow(m);
  // 1 - q^{-k} = (q^k - 1) / q^k
  return {-PolynomialQ::one_minus_q_pow(-m), PolynomialQ::monomial(1, -m)};
}

RationalFunctionQ RationalFunctionQ::q_pow(int m) {
  if (m >= 0) return PolynomialQ::monomial(1, m);
  return {PolynomialQ(1), PolynomialQ::monomial(1, -m)};
}

bool RationalFunctionQ::is_polynomial() const {
  return den_.is_constant() || exact_quotient(num_, den_).has_value();
}

RationalFunctionQ RationalFunctionQ::canonical() const {
  RationalFunctionQ out;
  if (num_.is_zero()) return out;
  PolynomialQ g = poly_gcd(num_, den_);
  PolynomialQ n = num_;
  PolynomialQ d = den_;
  if (g.degree() > 0) {
    n = divmod(n, g).quotient;
    d = divmod(d, g).quotient;
  }
  Integer l = n.denominator_lcm();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.denominator_lcm().get_mpz_t());
  Rational scale(l);
  n *= scale;
  d *= scale;
  Integer c = n.integer_content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.integer_content().get_mpz_t());
  Rational inv(Integer(1), c);
  if (sgn(d.trailing()) < 0) inv = -inv;
  n *= inv;
  d *= inv;
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant()) {
    num_ += o.num_ * den_ * (1 / o.den_.leading());
  } else if (auto f = exact_quotient(den_, o.den_)) {
    num_ += o.num_ * *f;
  } else if (auto f2 = exact_quotient(o.den_, den_)) {
    num_ = num_ * *f2 + o.num_;
    den_ = o.den_;
  } else {
    PolynomialQ g = poly_gcd(den_, o.den_);
    PolynomialQ other_cofactor = divmod(o.den_, g).quotient;
    PolynomialQ own_cofactor = divmod(den_, g).quotient;
    num_ = num_ * other_cofactor + o.num_ * own_cofactor;
    den_ *= other_cofactor;
  }
  if (num_.is_zero()) den_ = PolynomialQ(1);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) { return *this += -o; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunctionQ();
  num_ *= o.num_;
  if (!o.den_.is_constant() || o.den_.leading() != 1) den_ *= o.den_;
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  num_ *= o.den_;
  den_ *= o.num_;
  return *this = canonical();
}

bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFunctionQ::operator()(const Rational& q0) const {
  Rational d = den_(q0);
  if (!qwhit::is_zero(d)) return num_(q0) / d;
  RationalFunctionQ c = canonical();
  d = c.den_(q0);
  if (qwhit::is_zero(d)) throw std::domain_error("pole at q0 = " + q0.get_str());
  return c.num_(q0) / d;
}

std::string RationalFunctionQ::str() const {
  RationalFunctionQ c = canonical();
  if (c.den_ == PolynomialQ(1)) return c.num_.str();
  return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunctionQ& r) { return os << r.str(); }

}  // namespace qwhit
