#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qwhit {

struct ConvergenceReport {
  std::string name;
  std::vector<int> steps;          // k values, or truncation orders
  std::vector<double> deviation;   // one per step
  double tolerance = 0;
  bool identically_zero = false;
  bool pass = false;
  std::string detail;

  nlohmann::json to_json() const;
};

/// Coefficient of T_I in the rank-r Macdonald operator after x_i -> x_i q^{k i}
/// with t = q^{-k}, multiplied by prod_{i in I} q^{k (n - i)}.
double macdonald_scaled_coefficient(const std::vector<int>& subset, const std::vector<double>& x, double q, int k);

/// Coefficient of T_I in the q-Toda Hamiltonian, prod (1 - x_i/x_{i-1}) over
/// the non-adjacent steps of I.
double toda_coefficient(const std::vector<int>& subset, const std::vector<double>& x);

/// Sup over the monomials x^a, a in {0,1,2}^n, of the difference between the
/// two operators applied to x^a at the sample point, for each k. Passes when
/// the deviations strictly decrease and the last is below tolerance, or when
/// every deviation vanishes (the two operators then coincide term by term).
ConvergenceReport toda_degeneration_check(int r, int n, double q, const std::vector<int>& k_list,
                                          const std::vector<double>& x, double tolerance = 1e-3);

/// The four product identities behind the kernel limit, each truncated at N
/// factors for N in n_list, at w = xy:
///   prod_{m>=0} (1 - w q^{m-k}) / (1 - w q^m)       = prod_{j=1..k} (1 - w q^{-j})
///   prod_{m>=0} (1 - w q^m) / (1 - w q^{m+k})       = prod_{j=1..k} (1 - w q^{j-1})
///   prod_{m>=0} (1 - w q^{m-2k}) / (1 - w q^{m-k})  = prod_{j=k+1..2k} (1 - w q^{-j})
///   prod_{m>=0} (1 - w q^{m+k}) / (1 - w q^{m+2k})  = prod_{j=k+1..2k} (1 - w q^{j-1})
/// Deviation is relative to max(1, |right side|).
std::vector<ConvergenceReport> kernel_limit_check(double q, int k, double w, const std::vector<int>& n_list,
                                                  double tolerance = 1e-10);

}  // namespace qwhit
