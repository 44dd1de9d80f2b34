#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using qwhit::Exponent;

Laurent<Integer> complete_homogeneous(int k, std::size_t n) {
  Laurent<Integer> out(n);
  if (k < 0 || n == 0) return out;
  Exponent e(n, 0);
  // Compositions of k into n parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.add_term(e, Integer(1));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, k);
  return out;
}

Laurent<Integer> schur_jacobi_trudi(const Row& ascending) {
  const std::size_t n = ascending.size();
  if (!qwhit::is_weakly_increasing(ascending)) return Laurent<Integer>(n);
  const int base = ascending.front();
  Row lam(ascending.rbegin(), ascending.rend());
  for (int& x : lam) x -= base;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Laurent<Integer> det(n);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Laurent<Integer> term = Laurent<Integer>::constant(n, Integer(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      term *= complete_homogeneous(lam[i] - static_cast<int>(i) + static_cast<int>(perm[i]), n);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det.times_monomial(Exponent(n, base));
}

Integer weyl_dimension(const Row& a) {
  qwhit::Rational d = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      d *= qwhit::Rational(a[j] - a[i] + static_cast<long>(j - i), static_cast<long>(j - i));
    }
  }
  d.canonicalize();
  return d.get_num();
}

Laurent<RationalFunctionQ> gl2_closed_form(int a, int b) {
  auto factorial = [](int m) {
    qwhit::PolynomialQ f(1);
    for (int j = 1; j <= m; ++j) {
      std::vector<qwhit::Rational> c(j + 1, 0);
      c[0] = 1;
      c[j] = -1;
      f *= qwhit::PolynomialQ(c);
    }
    return f;
  };
  Laurent<RationalFunctionQ> out(2);
  for (int m = a; m <= b; ++m) {
    out.add_term({m, a + b - m}, RationalFunctionQ(qwhit::PolynomialQ(1), factorial(m - a) * factorial(b - m)));
  }
  return out;
}

}  // namespace oracle
