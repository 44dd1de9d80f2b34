#include "qwhit/characters/characters.hpp"

#include <numeric>
#include <stdexcept>

#include "qwhit/exact/eval.hpp"
#include "qwhit/exact/serialize.hpp"

namespace qwhit {

namespace {

template <class C>
CheckResult verdict(const Laurent<C>& residual, std::string detail = {}) {
  CheckResult res;
  res.pass = residual.is_zero();
  if (!res.pass) res.residual = laurent_to_json(residual);
  res.detail = std::move(detail);
  return res;
}

long total(const Row& r) { return std::accumulate(r.begin(), r.end(), 0L); }

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Lifts a character in n-1 variables to n variables times z_n^power.
template <class C>
Laurent<C> lift(const Laurent<C>& f, std::size_t n, long power) {
  Exponent shift(n, 0);
  shift[n - 1] = static_cast<int>(power);
  return f.extended(n).times_monomial(shift);
}

// Keeps monomials whose first nx exponents sum to at most bound.
Character truncate_x(const Character& f, std::size_t nx, int bound) {
  Character out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < nx; ++i) d += e[i];
    if (d <= bound) out.add_term(e, c);
  }
  return out;
}

}  // namespace

Laurent<Rational> to_rational(const Character& c) {
  return c.map_coefficients([](const Integer& x) { return Rational(x); });
}

Integer evaluate_at_ones(const Character& c) {
  Integer s = 0;
  for (const auto& [e, x] : c.terms()) s += x;
  return s;
}

Character char_gz(const Row& top) {
  Character out(top.size());
  GZPatternStream patterns(top);
  while (auto pat = patterns.next()) out.add_term(pattern_weight(*pat), Integer(1));
  return out;
}

CheckResult q0_limit_check(const LatticePoint& p) {
  return verdict(eval_at_q(psi_direct(p), Rational(0)) - to_rational(char_gz(p)));
}

CheckResult pieri_check(int r, const Row& top) {
  int n = static_cast<int>(top.size());
  Character rhs(n);
  for (const auto& subset : ordered_subsets(n, r)) {
    Row shifted = top;
    for (int i : subset) ++shifted[i - 1];
    rhs += char_gz(shifted);
  }
  return verdict(elementary_symmetric<Integer>(r, n) * char_gz(top) - rhs);
}

CheckResult branching_check(const Row& top) {
  const std::size_t n = top.size();
  if (n < 2) throw std::invalid_argument("branching needs rank at least 2");
  Character rhs(n);
  InterlacingStream lowers(top);
  while (auto mu = lowers.next()) rhs += lift(char_gz(*mu), n, total(top) - total(*mu));
  return verdict(char_gz(top) - rhs);
}

CheckResult cauchy_check(int n, int m, int degree_bound) {
  if (m > n || m < 1) throw std::invalid_argument("cauchy check needs 1 <= m <= n");
  const std::size_t nv = static_cast<std::size_t>(n + m);
  // Variables x_1..x_n then y_1..y_m.
  Character lhs = Character::constant(nv, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      Character series(nv);
      for (int k = 0; k <= degree_bound; ++k) {
        Exponent e(nv, 0);
        e[i] = k;
        e[n + j] = k;
        series.add_term(e, Integer(1));
      }
      lhs = truncate_x(lhs * series, n, degree_bound);
    }
  }
  Character rhs(nv);
  // Partitions with at most m parts and size <= D, ascending and padded.
  Row parts(m, 0);
  while (true) {
    if (is_weakly_increasing(parts) && total(parts) <= degree_bound) {
      Row x_row(n - m, 0);
      x_row.insert(x_row.end(), parts.begin(), parts.end());
      Character cx = char_gz(x_row).extended(nv);
      Character cy(nv);
      const Character chi_y = char_gz(parts);
      for (const auto& [e, c] : chi_y.terms()) {
        Exponent f(nv, 0);
        std::copy(e.begin(), e.end(), f.begin() + n);
        cy.add_term(f, c);
      }
      rhs += cx * cy;
    }
    int i = m - 1;
    while (i >= 0 && parts[i] == degree_bound) parts[i--] = 0;
    if (i < 0) break;
    ++parts[i];
  }
  return verdict(lhs - rhs);
}

Character constant_term_character(const Row& top, int degree_bound) {
  const std::size_t n = top.size();
  if (n < 2) throw std::invalid_argument("constant term form needs rank at least 2");
  if (!is_weakly_increasing(top)) return Character(n);
  const int base = top[0];
  Row mu(top.begin() + 1, top.end());
  for (int& x : mu) x -= base;
  const std::size_t ell = n - 1;
  const std::size_t nv = n + ell;  // x_1..x_n, y_1..y_ell

  Character kernel = Character::constant(nv, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      Character series(nv);
      for (int k = 0; k <= degree_bound; ++k) {
        Exponent e(nv, 0);
        e[i] = k;
        e[n + j] = -k;
        series.add_term(e, Integer(1));
      }
      kernel = truncate_x(kernel * series, n, degree_bound);
    }
  }
  Character weight = Character::constant(nv, 1);
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      if (i == j) continue;
      Exponent e(nv, 0);
      e[n + i] = 1;
      e[n + j] = -1;
      weight = weight * (Character::constant(nv, 1) - Character::monomial(e, Integer(1)));
    }
  }
  Character chi_mu(nv);
  const Character chi_small = char_gz(mu);
  for (const auto& [e, c] : chi_small.terms()) {
    Exponent f(nv, 0);
    std::copy(e.begin(), e.end(), f.begin() + n);
    chi_mu.add_term(f, c);
  }
  Character full = kernel * chi_mu * weight;
  Character out(n);
  Integer norm = factorial(static_cast<int>(ell));
  for (const auto& [e, c] : full.terms()) {
    bool constant_in_y = true;
    for (std::size_t j = 0; j < ell; ++j) constant_in_y = constant_in_y && e[n + j] == 0;
    if (!constant_in_y) continue;
    out.add_term(Exponent(e.begin(), e.begin() + n), c);
  }
  out = out.map_coefficients([&](const Integer& c) {
    if (c % norm != 0) throw std::logic_error("constant term not divisible by the symmetry factor");
    return Integer(c / norm);
  });
  return out.times_monomial(Exponent(n, base));
}

CheckResult constant_term_branching(const Row& top, int degree_bound) {
  long needed = total(top) - static_cast<long>(top.size()) * (top.empty() ? 0 : top[0]);
  std::string detail;
  if (degree_bound < needed) detail = "degree bound below required " + std::to_string(needed);
  return verdict(constant_term_character(top, degree_bound) - char_gz(top), detail);
}

Character psi_q1(const LatticePoint& p) {
  const int n = static_cast<int>(p.size());
  if (!is_weakly_increasing(p)) return Character(n);
  Character out = Character::monomial(Exponent(n, p[0]), Integer(1));
  for (int i = 1; i < n; ++i) out *= elementary_symmetric<Integer>(n - i, n).pow(p[i] - p[i - 1]);
  return out;
}

CheckResult q1_limit_check(const LatticePoint& p) {
  return verdict(eval_at_q(psi_tilde(p), Rational(1)) - to_rational(psi_q1(p)));
}

CheckResult h_eigencheck(int r, const LatticePoint& p) {
  const int n = static_cast<int>(p.size());
  LatticePoint shifted = p;
  for (int i = n - r; i < n; ++i) ++shifted[i];
  return verdict(psi_q1(shifted) - elementary_symmetric<Integer>(r, n) * psi_q1(p));
}

CheckResult q1_recursion_check(const LatticePoint& p) {
  const std::size_t n = p.size();
  if (n < 2) throw std::invalid_argument("recursion needs rank at least 2");
  auto gap_factorials = [](const Row& r) {
    Integer d = 1;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) d *= factorial(r[i + 1] - r[i]);
    return d;
  };
  auto psi_plain = [&](const Row& r) {
    if (!is_weakly_increasing(r)) return Laurent<Rational>(r.size());
    Rational inv(Integer(1), gap_factorials(r));
    Laurent<Rational> out = to_rational(psi_q1(r));
    out *= inv;
    return out;
  };

  Character binomial_sum(n);
  Laurent<Rational> factorial_sum(n);
  InterlacingStream lowers(p);
  while (auto l = lowers.next()) {
    long power = total(p) - total(*l);
    Integer b = 1;
    Integer den = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      b *= binomial(p[i + 1] - p[i], (*l)[i] - p[i]);
      den *= factorial((*l)[i] - p[i]) * factorial(p[i + 1] - (*l)[i]);
    }
    Character term = lift(psi_q1(*l), n, power);
    term *= b;
    binomial_sum += term;
    Laurent<Rational> plain = lift(psi_plain(*l), n, power);
    plain *= Rational(gap_factorials(*l), den);
    factorial_sum += plain;
  }
  CheckResult first = verdict(psi_q1(p) - binomial_sum, "binomial recursion");
  if (!first.pass) return first;
  return verdict(psi_plain(p) - factorial_sum);
}

CheckResult dimension_check(const LatticePoint& p) {
  if (!is_weakly_increasing(p) || p.empty() || p[0] < 0) {
    throw std::invalid_argument("dimension check needs a sorted point with nonnegative entries");
  }
  const int n = static_cast<int>(p.size());
  Integer expected = 1;
  for (int i = 1; i < n; ++i) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), binomial(n, n - i).get_mpz_t(), static_cast<unsigned long>(p[i] - p[i - 1]));
    expected *= f;
  }
  Integer got = evaluate_at_ones(psi_q1(p));
  CheckResult res;
  res.pass = got == expected;
  if (!res.pass) res.residual = {{"expected", expected.get_str()}, {"got", got.get_str()}};
  return res;
}

}  // namespace qwhit
