#include "qwhit/whittaker/whittaker.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qwhit/combinatorics/q_analog.hpp"

namespace qwhit {

namespace {

long row_total(const LatticePoint& p) { return std::accumulate(p.begin(), p.end(), 0L); }

}  // namespace

Exponent pattern_weight(const GZPattern& pat) {
  Exponent e(pat.size());
  for (std::size_t k = 1; k <= pat.size(); ++k) e[k - 1] = static_cast<int>(pat.row_sum(k) - pat.row_sum(k - 1));
  return e;
}

WhittakerValue psi_direct(const LatticePoint& p) {
  const std::size_t n = p.size();
  WhittakerValue out(n);
  GZPatternStream patterns(p);
  while (auto pat = patterns.next()) {
    PolynomialQ num(1);
    for (std::size_t k = 2; k < n; ++k) {
      const Row& r = pat->row(k);
      for (std::size_t i = 0; i + 1 < k; ++i) num *= q_factorial(r[i + 1] - r[i]);
    }
    PolynomialQ den(1);
    for (std::size_t k = 1; k < n; ++k) {
      const Row& r = pat->row(k);
      const Row& u = pat->row(k + 1);
      for (std::size_t i = 0; i < k; ++i) {
        den *= q_factorial(r[i] - u[i]);
        den *= q_factorial(u[i + 1] - r[i]);
      }
    }
    out.add_term(pattern_weight(*pat), RationalFunctionQ(std::move(num), std::move(den)));
  }
  return out.map_coefficients([](const RationalFunctionQ& c) { return c.canonical(); });
}

PolynomialQ delta_factor(const LatticePoint& p) {
  if (!is_dominant(p)) throw std::domain_error("outside dominant cone");
  return delta_prime(p);
}

PolynomialQ delta_prime(const LatticePoint& p) {
  PolynomialQ out(1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int gap = p[i + 1] - p[i];
    if (!theta(gap)) return PolynomialQ();
    out *= q_factorial(gap);
  }
  return out;
}

TildeValue psi_tilde(const LatticePoint& p) {
  const std::size_t n = p.size();
  TildeValue out(n);
  GZPatternStream patterns(p);
  while (auto pat = patterns.next()) {
    PolynomialQ c(1);
    for (std::size_t k = 1; k < n; ++k) {
      const Row& r = pat->row(k);
      const Row& u = pat->row(k + 1);
      for (std::size_t i = 0; i < k; ++i) c *= q_binomial(u[i + 1] - u[i], r[i] - u[i]);
    }
    out.add_term(pattern_weight(*pat), c);
  }
  return out;
}

RationalFunctionQ kernel_q(const LatticePoint& upper, const LatticePoint& lower) {
  if (upper.size() != lower.size() + 1) throw std::invalid_argument("kernel rows must have lengths l+1 and l");
  PolynomialQ den(1);
  for (std::size_t i = 0; i < lower.size(); ++i) {
    int a = lower[i] - upper[i];
    int b = upper[i + 1] - lower[i];
    if (!theta(a) || !theta(b)) return RationalFunctionQ();
    den *= q_factorial(a);
    den *= q_factorial(b);
  }
  return RationalFunctionQ(PolynomialQ(1), den);
}

WhittakerValue WhittakerRecursion::operator()(const LatticePoint& p) {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
  }
  WhittakerValue v = compute(p);
  std::unique_lock lock(mutex_);
  return memo_.emplace(p, std::move(v)).first->second;
}

std::size_t WhittakerRecursion::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

WhittakerValue WhittakerRecursion::compute(const LatticePoint& p) {
  const std::size_t n = p.size();
  if (n == 0) throw std::invalid_argument("empty lattice point");
  if (n == 1) {
    Exponent e{p[0]};
    return WhittakerValue::monomial(e, RationalFunctionQ(1));
  }
  WhittakerValue out(n);
  const long total = row_total(p);
  InterlacingStream lowers(p);
  while (auto l = lowers.next()) {
    RationalFunctionQ c = kernel_q(p, *l) * RationalFunctionQ(delta_prime(*l));
    if (c.is_zero()) continue;
    Exponent shift(n, 0);
    shift[n - 1] = static_cast<int>(total - row_total(*l));
    WhittakerValue lower = (*this)(*l).extended(n).times_monomial(shift);
    lower *= c;
    out += lower;
  }
  return out.map_coefficients([](const RationalFunctionQ& c) { return c.canonical(); });
}

WhittakerValue psi_recursive(const LatticePoint& p) {
  static WhittakerRecursion recursion;
  return recursion(p);
}

}  // namespace qwhit
