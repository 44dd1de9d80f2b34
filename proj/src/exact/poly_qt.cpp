#include "qwhit/exact/poly_qt.hpp"

#include <algorithm>
#include <stdexcept>

#include "term_parser.hpp"

namespace qwhit {

PolynomialQT::PolynomialQT(const Rational& c) {
  if (!qwhit::is_zero(c)) terms_.emplace(Key{0, 0}, c).first->second.canonicalize();
}

PolynomialQT::PolynomialQT(const PolynomialQ& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!qwhit::is_zero(c[i])) terms_.emplace(Key{static_cast<int>(i), 0}, c[i]);
}

PolynomialQT PolynomialQT::monomial(const Rational& c, int q_deg, int t_deg) {
  if (q_deg < 0 || t_deg < 0) throw std::domain_error("negative polynomial degree");
  PolynomialQT p;
  if (!qwhit::is_zero(c)) p.terms_.emplace(Key{q_deg, t_deg}, c).first->second.canonicalize();
  return p;
}

int PolynomialQT::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

PolynomialQT& PolynomialQT::operator+=(const PolynomialQT& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (qwhit::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

PolynomialQT& PolynomialQT::operator-=(const PolynomialQT& o) { return *this += -o; }

PolynomialQT& PolynomialQT::operator*=(const Rational& s) {
  if (qwhit::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

PolynomialQT operator*(const PolynomialQT& a, const PolynomialQT& b) {
  PolynomialQT out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      PolynomialQT::Key k{ka.first + kb.first, ka.second + kb.second};
      Rational v = ca * cb;
      auto [it, inserted] = out.terms_.emplace(k, v);
      if (!inserted) {
        it->second += v;
        if (qwhit::is_zero(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

PolynomialQT PolynomialQT::operator-() const {
  PolynomialQT r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

PolynomialQT PolynomialQT::pow(unsigned k) const {
  PolynomialQT r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

PolynomialQ PolynomialQT::at_t_equals_q() const {
  PolynomialQ out;
  for (const auto& [k, c] : terms_) out += PolynomialQ::monomial(c, k.first + k.second);
  return out;
}

std::vector<PolynomialQ> PolynomialQT::t_coefficients() const {
  std::vector<PolynomialQ> out(static_cast<std::size_t>(t_degree() + 1));
  for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k.second)] += PolynomialQ::monomial(c, k.first);
  return out;
}

PolynomialQT PolynomialQT::from_t_coefficients(const std::vector<PolynomialQ>& coeffs) {
  PolynomialQT out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!qwhit::is_zero(c[i])) out.terms_.emplace(Key{static_cast<int>(i), static_cast<int>(j)}, c[i]);
  }
  return out;
}

Integer PolynomialQT::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [k, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer PolynomialQT::integer_content() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::string PolynomialQT::str() const {
  std::vector<std::pair<Rational, std::vector<std::pair<char, int>>>> terms;
  // ascending total degree, then ascending t-degree
  std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.second < b.first.second;
  });
  for (const auto& [k, c] : sorted) {
    std::vector<std::pair<char, int>> vars;
    if (k.first > 0) vars.emplace_back('q', k.first);
    if (k.second > 0) vars.emplace_back('t', k.second);
    terms.emplace_back(c, std::move(vars));
  }
  return detail::render_terms(terms);
}

PolynomialQT PolynomialQT::parse(std::string_view text) {
  PolynomialQT out;
  for (const auto& term : detail::parse_terms(text, "qt"))
    out += monomial(term.coeff, term.powers[0], term.powers[1]);
  return out;
}

namespace {

using Recursive = std::vector<PolynomialQ>;  // coefficients in t over Q[q]

void trim(Recursive& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

PolynomialQ content(const Recursive& a) {
  PolynomialQ g;
  for (const auto& c : a) {
    g = poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Recursive divide_by(const Recursive& a, const PolynomialQ& c) {
  Recursive out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(divmod(x, c).quotient);
  return out;
}

Recursive primitive_part(const Recursive& a) {
  if (a.empty()) return a;
  return divide_by(a, content(a));
}

// lc(b)^k * a mod b, computed step by step in Q[q][t].
Recursive pseudo_remainder(Recursive a, const Recursive& b) {
  const std::size_t db = b.size() - 1;
  const PolynomialQ& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    PolynomialQ la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

PolynomialQT normalize_leading(PolynomialQT p) {
  if (p.is_zero()) return p;
  p *= 1 / p.leading();
  return p;
}

}  // namespace

PolynomialQT poly_gcd(const PolynomialQT& a, const PolynomialQT& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  Recursive x = a.t_coefficients();
  Recursive y = b.t_coefficients();
  PolynomialQ cx = content(x);
  PolynomialQ cy = content(y);
  PolynomialQ c = poly_gcd(cx, cy);
  x = divide_by(x, cx);
  y = divide_by(y, cy);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Recursive r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& coeff : x) coeff *= c;
  return normalize_leading(PolynomialQT::from_t_coefficients(x));
}

std::optional<PolynomialQT> exact_quotient(const PolynomialQT& a, const PolynomialQT& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Recursive rem = a.t_coefficients();
  const Recursive div = b.t_coefficients();
  if (rem.size() < div.size()) {
    if (rem.empty()) return PolynomialQT{};
    return std::nullopt;
  }
  Recursive quot(rem.size() - div.size() + 1);
  const std::size_t db = div.size() - 1;
  while (!rem.empty()) {
    if (rem.size() - 1 < db) return std::nullopt;
    auto f = exact_quotient(rem.back(), div.back());
    if (!f) return std::nullopt;
    std::size_t shift = rem.size() - 1 - db;
    quot[shift] += *f;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= *f * div[j];
    if (!rem.back().is_zero()) return std::nullopt;
    trim(rem);
  }
  return PolynomialQT::from_t_coefficients(quot);
}

std::ostream& operator<<(std::ostream& os, const PolynomialQT& p) { return os << p.str(); }

}  // namespace qwhit
