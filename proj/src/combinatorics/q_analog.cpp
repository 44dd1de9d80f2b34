#include "qwhit/combinatorics/q_analog.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwhit {

namespace {

std::mutex factorial_mutex;
std::vector<PolynomialQ> factorial_memo{PolynomialQ(1)};

}  // namespace

PolynomialQ q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of negative argument " + std::to_string(n));
  std::lock_guard<std::mutex> lock(factorial_mutex);
  while (static_cast<int>(factorial_memo.size()) <= n) {
    int m = static_cast<int>(factorial_memo.size());
    factorial_memo.push_back(factorial_memo.back() * PolynomialQ::one_minus_q_pow(m));
  }
  return factorial_memo[n];
}

PolynomialQ q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return PolynomialQ();
  // Row-by-row q-Pascal keeps everything polynomial.
  std::vector<PolynomialQ> row{PolynomialQ(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<PolynomialQ> next(m + 1);
    next[0] = PolynomialQ(1);
    next[m] = PolynomialQ(1);
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[k];
}

}  // namespace qwhit
