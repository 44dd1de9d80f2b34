#include "qwhit/exact/poly_q.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "term_parser.hpp"

namespace qwhit {

PolynomialQ::PolynomialQ(const Rational& c) {
  if (!qwhit::is_zero(c)) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

PolynomialQ PolynomialQ::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::domain_error("negative polynomial degree");
  PolynomialQ p;
  if (qwhit::is_zero(c)) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  p.c_.back().canonicalize();
  return p;
}

PolynomialQ PolynomialQ::one_minus_q_pow(int m) {
  if (m < 0) throw std::domain_error("1 - q^m with negative m is not a polynomial");
  if (m == 0) return {};
  PolynomialQ p = monomial(-1, m);
  p.c_[0] += 1;
  return p;
}

void PolynomialQ::trim() {
  while (!c_.empty() && qwhit::is_zero(c_.back())) c_.pop_back();
}

const Rational& PolynomialQ::trailing() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return c;
  }
  throw std::domain_error("zero polynomial has no trailing coefficient");
}

Rational PolynomialQ::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (qwhit::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return PolynomialQ(std::move(out));
}

PolynomialQ& PolynomialQ::operator*=(const PolynomialQ& o) {
  *this = *this * o;
  return *this;
}

PolynomialQ& PolynomialQ::operator*=(const Rational& s) {
  if (qwhit::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolynomialQ PolynomialQ::operator-() const {
  PolynomialQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Rational PolynomialQ::operator()(const Rational& q0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

PolynomialQ PolynomialQ::monic() const {
  if (is_zero()) return {};
  PolynomialQ r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.c_) c *= inv;
  return r;
}

PolynomialQ PolynomialQ::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  PolynomialQ r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Integer PolynomialQ::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer PolynomialQ::integer_content() const {
  Integer g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

bool PolynomialQ::has_integer_coefficients() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string PolynomialQ::str() const {
  std::vector<std::pair<Rational, std::vector<std::pair<char, int>>>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (qwhit::is_zero(c_[i])) continue;
    std::vector<std::pair<char, int>> vars;
    if (i > 0) vars.emplace_back('q', static_cast<int>(i));
    terms.emplace_back(c_[i], std::move(vars));
  }
  return detail::render_terms(terms);
}

PolynomialQ PolynomialQ::parse(std::string_view text) {
  PolynomialQ out;
  for (const auto& term : detail::parse_terms(text, "q")) {
    out += monomial(term.coeff, term.powers[0]);
  }
  return out;
}

PolyDivision divmod(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {PolynomialQ{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  Rational inv_lead = 1 / b.leading();
  Rational tmp;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (qwhit::is_zero(rem[k])) continue;
    Rational f = rem[k] * inv_lead;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[j].get_mpq_t());
      rem[k - db + j] -= tmp;
    }
  }
  rem.resize(db);
  return {PolynomialQ(std::move(quot)), PolynomialQ(std::move(rem))};
}

std::optional<PolynomialQ> exact_quotient(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero()) return PolynomialQ{};
  if (a.degree() < b.degree()) return std::nullopt;
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b) {
  PolynomialQ x = a.monic();
  PolynomialQ y = b.monic();
  while (!y.is_zero()) {
    PolynomialQ r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::ostream& operator<<(std::ostream& os, const PolynomialQ& p) { return os << p.str(); }

}  // namespace qwhit
