#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwhit/exact/poly_q.hpp"
#include "qwhit/exact/rational.hpp"

namespace qwhit {

/// Bivariate polynomial in (q, t) with rational coefficients, sparse.
class PolynomialQT {
 public:
  /// (degree in q, degree in t)
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  PolynomialQT() = default;
  PolynomialQT(const Rational& c);  // NOLINT
  PolynomialQT(long c) : PolynomialQT(Rational(c)) {}  // NOLINT
  PolynomialQT(const PolynomialQ& p);  // NOLINT: embeds Q[q]

  static PolynomialQT monomial(const Rational& c, int q_deg, int t_deg);
  static PolynomialQT q() { return monomial(1, 1, 0); }
  static PolynomialQT t() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int t_degree() const;
  /// Coefficient with the largest key; requires nonzero.
  const Rational& leading() const { return terms_.rbegin()->second; }

  PolynomialQT& operator+=(const PolynomialQT& o);
  PolynomialQT& operator-=(const PolynomialQT& o);
  PolynomialQT& operator*=(const Rational& s);
  friend PolynomialQT operator+(PolynomialQT a, const PolynomialQT& b) { return a += b; }
  friend PolynomialQT operator-(PolynomialQT a, const PolynomialQT& b) { return a -= b; }
  friend PolynomialQT operator*(const PolynomialQT& a, const PolynomialQT& b);
  friend PolynomialQT operator*(PolynomialQT a, const Rational& s) { return a *= s; }
  PolynomialQT operator-() const;
  PolynomialQT pow(unsigned k) const;

  friend bool operator==(const PolynomialQT& a, const PolynomialQT& b) { return a.terms_ == b.terms_; }

  /// Substitutes t = q.
  PolynomialQ at_t_equals_q() const;

  /// Coefficients of t^0, t^1, ... as polynomials in q.
  std::vector<PolynomialQ> t_coefficients() const;
  static PolynomialQT from_t_coefficients(const std::vector<PolynomialQ>& coeffs);

  Integer denominator_lcm() const;
  Integer integer_content() const;

  std::string str() const;
  static PolynomialQT parse(std::string_view text);

 private:
  Terms terms_;
};

inline bool is_zero(const PolynomialQT& p) { return p.is_zero(); }

/// gcd in Q[q,t] via content / primitive-part in Q[q][t], normalized to
/// leading coefficient 1; gcd(0, 0) = 0.
PolynomialQT poly_gcd(const PolynomialQT& a, const PolynomialQT& b);

/// a / b when b divides a exactly in Q[q,t], otherwise nullopt.
std::optional<PolynomialQT> exact_quotient(const PolynomialQT& a, const PolynomialQT& b);

std::ostream& operator<<(std::ostream& os, const PolynomialQT& p);

}  // namespace qwhit
