#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qwhit/exact/rational.hpp"

namespace qwhit {

/// Univariate polynomial in the formal parameter q with rational
/// coefficients. Dense storage, ascending powers, no trailing zeros.
class PolynomialQ {
 public:
  PolynomialQ() = default;
  PolynomialQ(const Rational& c);  // NOLINT: constants promote implicitly
  PolynomialQ(long c) : PolynomialQ(Rational(c)) {}  // NOLINT
  explicit PolynomialQ(std::vector<Rational> coeffs);

  static PolynomialQ monomial(const Rational& c, int degree);
  static PolynomialQ q() { return monomial(1, 1); }
  /// 1 - q^m for m >= 0 (zero polynomial for m == 0).
  static PolynomialQ one_minus_q_pow(int m);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  /// Lowest-degree nonzero coefficient.
  const Rational& trailing() const;

  PolynomialQ& operator+=(const PolynomialQ& o);
  PolynomialQ& operator-=(const PolynomialQ& o);
  PolynomialQ& operator*=(const PolynomialQ& o);
  PolynomialQ& operator*=(const Rational& s);

  friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
  friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
  friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b);
  friend PolynomialQ operator*(PolynomialQ a, const Rational& s) { return a *= s; }
  friend PolynomialQ operator*(const Rational& s, PolynomialQ a) { return a *= s; }
  PolynomialQ operator-() const;

  friend bool operator==(const PolynomialQ& a, const PolynomialQ& b) { return a.c_ == b.c_; }

  /// Exact substitution q = q0.
  Rational operator()(const Rational& q0) const;

  /// Divides by the leading coefficient; zero stays zero.
  PolynomialQ monic() const;
  /// Multiplies by q^k, k >= 0.
  PolynomialQ shifted(int k) const;
  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const;
  /// gcd of coefficient numerators (valid for integer polynomials).
  Integer integer_content() const;
  bool has_integer_coefficients() const;

  /// Ascending rendering, e.g. "1 - q + 2*q^2"; "0" for zero.
  std::string str() const;
  static PolynomialQ parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const PolynomialQ& p) { return p.is_zero(); }

struct PolyDivision {
  PolynomialQ quotient;
  PolynomialQ remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const PolynomialQ& a, const PolynomialQ& b);

/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<PolynomialQ> exact_quotient(const PolynomialQ& a, const PolynomialQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b);

std::ostream& operator<<(std::ostream& os, const PolynomialQ& p);

}  // namespace qwhit
