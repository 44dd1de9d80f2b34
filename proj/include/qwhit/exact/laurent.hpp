#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qwhit/exact/rational.hpp"

namespace qwhit {

using Exponent = std::vector<int>;

namespace detail {

inline int add_exponents(int a, int b) {
#ifndef NDEBUG
  int out = 0;
  bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "Laurent exponent overflow");
  (void)overflow;
  return out;
#else
  return a + b;
#endif
}

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

}  // namespace detail

/// Multivariate Laurent polynomial in z_1..z_n with coefficients in C.
///
/// Sparse: a map from exponent vectors (lexicographically ordered) to
/// nonzero coefficients. C needs value semantics, ring operators and an
/// ADL-visible is_zero(const C&).
template <class C>
class Laurent {
 public:
  using Coefficient = C;
  using Terms = std::map<Exponent, C>;

  Laurent() = default;
  explicit Laurent(std::size_t nvars) : nvars_(nvars) {}

  static Laurent constant(std::size_t nvars, const C& c) {
    Laurent p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static Laurent monomial(const Exponent& e, const C& c) {
    Laurent p(e.size());
    p.add_term(e, c);
    return p;
  }

  /// z_i (0-based i).
  static Laurent variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, C(1));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Zero coefficient for absent exponents.
  C coefficient_of(const Exponent& e) const {
    check_exponent(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  /// Accumulates c into the coefficient of z^e.
  void add_term(const Exponent& e, const C& c) {
    check_exponent(e);
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Laurent& operator*=(const C& s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const C& s) { return a *= s; }
  friend Laurent operator*(const C& s, Laurent a) { return a *= s; }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    Laurent out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::add_exponents(ea[i], eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplication by the monomial z^e.
  Laurent times_monomial(const Exponent& shift) const {
    check_exponent(shift);
    Laurent out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = detail::add_exponents(f[i], shift[i]);
      out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
  }

  Laurent pow(unsigned k) const {
    Laurent r = constant(nvars_, C(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }

  /// Embeds into more variables (new exponents 0 appended).
  Laurent extended(std::size_t nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("cannot shrink variable count");
    Laurent out(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f.resize(nvars, 0);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Applies f to every coefficient, dropping zeros.
  template <class F>
  auto map_coefficients(F&& f) const -> Laurent<decltype(f(std::declval<const C&>()))> {
    Laurent<decltype(f(std::declval<const C&>()))> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Sum of exponents of every monomial; empty when zero.
  std::vector<int> total_degrees() const {
    std::vector<int> out;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      out.push_back(s);
    }
    return out;
  }

 private:
  void check_exponent(const Exponent& e) const {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
  }
  void check_compatible(const Laurent& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

template <class C>
bool is_zero(const Laurent<C>& p) {
  return p.is_zero();
}

/// Human-readable form "c*z1^2*z2^-1 + ..."; coefficients via operator<<.
template <class C>
std::ostream& operator<<(std::ostream& os, const Laurent<C>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream coeff;
    coeff << c;
    bool is_one = coeff.str() == "1";
    bool has_var = false;
    for (int x : e) has_var = has_var || x != 0;
    if (!is_one || !has_var) os << "(" << coeff.str() << ")";
    bool need_star = !is_one || !has_var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "z" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os;
}

}  // namespace qwhit
