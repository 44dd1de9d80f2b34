#pragma once

// Small random generators for property tests. Every test seeds its own
// std::mt19937 so failures reproduce.

#include <algorithm>
#include <random>

#include "qwhit/combinatorics/gz.hpp"
#include "qwhit/exact/poly_q.hpp"

namespace gen {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline qwhit::Row point(std::mt19937& rng, int n, int lo, int hi) {
  qwhit::Row p(n);
  for (int& x : p) x = uniform(rng, lo, hi);
  return p;
}

inline qwhit::Row sorted_point(std::mt19937& rng, int n, int lo, int hi) {
  qwhit::Row p = point(rng, n, lo, hi);
  std::sort(p.begin(), p.end());
  return p;
}

inline qwhit::PolynomialQ poly(std::mt19937& rng, int max_degree, int range) {
  std::vector<qwhit::Rational> c(uniform(rng, 0, max_degree) + 1);
  for (auto& x : c) x = qwhit::Rational(uniform(rng, -range, range), uniform(rng, 1, 3));
  return qwhit::PolynomialQ(c);
}

inline qwhit::PolynomialQ nonzero_poly(std::mt19937& rng, int max_degree, int range) {
  qwhit::PolynomialQ p;
  while (p.is_zero()) p = poly(rng, max_degree, range);
  return p;
}

}  // namespace gen
