#include "qwhit/macdonald/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qwhit/toda/operators.hpp"

namespace qwhit {

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) rows.push_back({{"step", steps[i]}, {"deviation", deviation[i]}});
  return {{"name", name},          {"table", rows}, {"tolerance", tolerance}, {"identically_zero", identically_zero},
          {"status", pass ? "pass" : "fail"}, {"detail", detail}};
}

double macdonald_scaled_coefficient(const std::vector<int>& subset, const std::vector<double>& x, double q, int k) {
  const int n = static_cast<int>(x.size());
  const int r = static_cast<int>(subset.size());
  const double t = std::pow(q, -k);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[i] = x[i] * std::pow(q, static_cast<double>(k) * (i + 1));
  std::vector<bool> in(n, false);
  for (int i : subset) in[i - 1] = true;
  double c = std::pow(t, r * (r - 1) / 2);
  for (int i : subset) c *= std::pow(q, static_cast<double>(k) * (n - i));
  for (int i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (in[j]) continue;
      c *= (t * y[i] - y[j]) / (y[i] - y[j]);
    }
  }
  return c;
}

double toda_coefficient(const std::vector<int>& subset, const std::vector<double>& x) {
  double c = 1;
  int prev = 0;
  for (int i : subset) {
    if (i - prev != 1) c *= 1 - x[i - 1] / x[i - 2];
    prev = i;
  }
  return c;
}

ConvergenceReport toda_degeneration_check(int r, int n, double q, const std::vector<int>& k_list,
                                          const std::vector<double>& x, double tolerance) {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("sample point has wrong length");
  if (r < 1 || r > n) throw std::out_of_range("operator index out of range");
  if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0, 1)");
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) throw std::invalid_argument("sample coordinates must be nonzero");
    for (int j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) throw std::invalid_argument("coincident coordinates in sample point");
    }
  }
  ConvergenceReport rep;
  rep.name = "degenerate r=" + std::to_string(r) + " n=" + std::to_string(n);
  rep.tolerance = tolerance;
  const auto subsets = ordered_subsets(n, r);

  std::vector<std::vector<int>> dictionary;
  std::vector<int> a(n, 0);
  while (true) {
    dictionary.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == 2) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }

  for (int k : k_list) {
    double sup = 0;
    for (const auto& exps : dictionary) {
      double mono = 1;
      for (int i = 0; i < n; ++i) mono *= std::pow(x[i], exps[i]);
      double diff = 0;
      for (const auto& subset : subsets) {
        int shift = 0;
        for (int i : subset) shift += exps[i - 1];
        double delta = macdonald_scaled_coefficient(subset, x, q, k) - toda_coefficient(subset, x);
        diff += delta * std::pow(q, shift);
      }
      sup = std::max(sup, std::abs(diff * mono));
    }
    rep.steps.push_back(k);
    rep.deviation.push_back(sup);
  }
  rep.identically_zero = std::all_of(rep.deviation.begin(), rep.deviation.end(), [](double d) { return d == 0; });
  bool decreasing = true;
  for (std::size_t i = 1; i < rep.deviation.size(); ++i) decreasing = decreasing && rep.deviation[i] < rep.deviation[i - 1];
  bool small = !rep.deviation.empty() && rep.deviation.back() < tolerance;
  rep.pass = small && (decreasing || rep.identically_zero);
  if (rep.identically_zero) rep.detail = "operators coincide at every k";
  else if (!decreasing) rep.detail = "deviation not strictly decreasing";
  else if (!small) rep.detail = "final deviation above tolerance";
  return rep;
}

namespace {

// prod_{j=from..to} (1 - w q^{sign * j + offset})
double product(double w, double q, int from, int to, int sign, int offset) {
  double p = 1;
  for (int j = from; j <= to; ++j) p *= 1 - w * std::pow(q, sign * j + offset);
  return p;
}

}  // namespace

std::vector<ConvergenceReport> kernel_limit_check(double q, int k, double w, const std::vector<int>& n_list,
                                                  double tolerance) {
  if (!(std::abs(q) < 1)) throw std::invalid_argument("|q| must be below 1");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  struct Identity {
    const char* name;
    int num_shift;  // numerator factor 1 - w q^{m + num_shift}
    int den_shift;  // denominator factor 1 - w q^{m + den_shift}
    double rhs;
  };
  const Identity ids[] = {
      {"kernel factor q^{m-k}/q^m", -k, 0, product(w, q, 1, k, -1, 0)},
      {"kernel factor q^m/q^{m+k}", 0, k, product(w, q, 1, k, 1, -1)},
      {"kernel factor q^{m-2k}/q^{m-k}", -2 * k, -k, product(w, q, k + 1, 2 * k, -1, 0)},
      {"kernel factor q^{m+k}/q^{m+2k}", k, 2 * k, product(w, q, k + 1, 2 * k, 1, -1)},
  };
  std::vector<ConvergenceReport> out;
  for (const auto& id : ids) {
    ConvergenceReport rep;
    rep.name = id.name;
    rep.tolerance = tolerance;
    for (int n : n_list) {
      // Factors with equal exponents on both sides cancel before
      // evaluation, so a vanishing factor shared by numerator and
      // denominator does not produce 0/0.
      std::multiset<int> num;
      std::multiset<int> den;
      for (int m = 0; m < n; ++m) {
        num.insert(m + id.num_shift);
        int d = m + id.den_shift;
        auto it = num.find(d);
        if (it != num.end()) num.erase(it);
        else den.insert(d);
      }
      for (auto it = den.begin(); it != den.end();) {
        auto jt = num.find(*it);
        if (jt != num.end()) {
          num.erase(jt);
          it = den.erase(it);
        } else {
          ++it;
        }
      }
      double lhs = 1;
      for (int e : num) lhs *= 1 - w * std::pow(q, e);
      for (int e : den) lhs /= 1 - w * std::pow(q, e);
      rep.steps.push_back(n);
      rep.deviation.push_back(std::abs(lhs - id.rhs) / std::max(1.0, std::abs(id.rhs)));
    }
    bool nonincreasing = true;
    for (std::size_t i = 1; i < rep.deviation.size(); ++i) {
      nonincreasing = nonincreasing && rep.deviation[i] <= rep.deviation[i - 1];
    }
    rep.identically_zero = std::all_of(rep.deviation.begin(), rep.deviation.end(), [](double d) { return d == 0; });
    rep.pass = nonincreasing && !rep.deviation.empty() && rep.deviation.back() < tolerance;
    if (!rep.pass) rep.detail = nonincreasing ? "final deviation above tolerance" : "deviation grew with truncation order";
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace qwhit
