#include "qwhit/toda/operators.hpp"

#include <sstream>
#include <stdexcept>

#include "qwhit/exact/serialize.hpp"

namespace qwhit {

int QPowerFactor::exponent(const LatticePoint& p) const {
  int e = offset;
  for (std::size_t i = 0; i < linear.size(); ++i) e += linear[i] * p[i];
  return e;
}

RationalFunctionQ OperatorTerm::coefficient(const LatticePoint& p) const {
  RationalFunctionQ c(1);
  for (const auto& f : factors) {
    c *= RationalFunctionQ::one_minus_q_pow(f.exponent(p));
    if (c.is_zero()) break;
  }
  return c;
}

std::string DifferenceOperator::describe() const {
  std::ostringstream os;
  os << name << " on Z^" << rank << ":";
  if (terms.empty()) os << " 0";
  for (const auto& t : terms) {
    os << "\n  ";
    for (const auto& f : t.factors) {
      os << "(1 - q^(";
      bool first = true;
      for (std::size_t i = 0; i < f.linear.size(); ++i) {
        if (f.linear[i] == 0) continue;
        os << (f.linear[i] > 0 ? (first ? "" : " + ") : (first ? "-" : " - ")) << "p" << (i + 1);
        first = false;
      }
      if (f.offset != 0 || first) os << (f.offset < 0 ? " - " : (first ? "" : " + ")) << std::abs(f.offset);
      os << ")) ";
    }
    os << "T^(";
    for (std::size_t i = 0; i < t.shift.size(); ++i) os << (i ? "," : "") << t.shift[i];
    os << ")";
  }
  return os.str();
}

std::vector<std::vector<int>> ordered_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && s[i] == n - r + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

namespace {

void check_range(int r, int lo, int hi, const char* what) {
  if (r < lo || r > hi) throw std::out_of_range(std::string(what) + ": index r out of range");
}

Exponent shift_of(const std::vector<int>& subset, int n) {
  Exponent s(n, 0);
  for (int i : subset) s[i - 1] = 1;
  return s;
}

// 1 - q^{p_a - p_b + offset}, 1-based a and b.
QPowerFactor difference_factor(int n, int a, int b, int offset) {
  QPowerFactor f{std::vector<int>(n, 0), offset};
  f.linear[a - 1] += 1;
  f.linear[b - 1] -= 1;
  return f;
}

}  // namespace

DifferenceOperator build_H(int r, int n) {
  check_range(r, 1, n, "H");
  DifferenceOperator op{"H_" + std::to_string(r), static_cast<std::size_t>(n), {}};
  for (const auto& subset : ordered_subsets(n, r)) {
    OperatorTerm t{shift_of(subset, n), {}};
    int prev = 0;
    for (int i : subset) {
      if (i - prev != 1) t.factors.push_back(difference_factor(n, i, i - 1, 1));
      prev = i;
    }
    op.terms.push_back(std::move(t));
  }
  return op;
}

DifferenceOperator build_H_tilde(int r, int n) {
  check_range(r, 0, n + 1, "H~");
  DifferenceOperator op{"H~_" + std::to_string(r), static_cast<std::size_t>(n), {}};
  if (r == n + 1) return op;
  for (const auto& subset : ordered_subsets(n, r)) {
    OperatorTerm t{shift_of(subset, n), {}};
    for (std::size_t k = 0; k < subset.size(); ++k) {
      int i = subset[k];
      int next = k + 1 < subset.size() ? subset[k + 1] : n + 1;
      if (next - i != 1 && i < n) t.factors.push_back(difference_factor(n, i, i + 1, 1));
    }
    op.terms.push_back(std::move(t));
  }
  return op;
}

DifferenceOperator build_J(int r, int n) {
  check_range(r, 1, n, "J");
  DifferenceOperator op{"J_" + std::to_string(r), static_cast<std::size_t>(n), {}};
  for (const auto& subset : ordered_subsets(n, r)) {
    OperatorTerm t{shift_of(subset, n), {}};
    for (std::size_t k = 0; k < subset.size(); ++k) {
      int i = subset[k];
      int next = k + 1 < subset.size() ? subset[k + 1] : n + 1;
      if (next - i != 1) t.factors.push_back(difference_factor(n, i + 1, i, 0));
    }
    op.terms.push_back(std::move(t));
  }
  return op;
}

DifferenceOperator build_h(int r, int n) {
  check_range(r, 1, n, "h");
  std::vector<int> last;
  for (int i = n - r + 1; i <= n; ++i) last.push_back(i);
  return {"h_" + std::to_string(r), static_cast<std::size_t>(n), {OperatorTerm{shift_of(last, n), {}}}};
}

LatticeFunction::Value apply(const DifferenceOperator& op, const LatticeFunction& f, const LatticePoint& p) {
  if (op.rank != f.rank() || p.size() != op.rank) throw std::invalid_argument("operator rank mismatch");
  LatticeFunction::Value out(f.value_nvars());
  LatticePoint shifted(p.size());
  for (const auto& t : op.terms) {
    RationalFunctionQ c = t.coefficient(p);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < p.size(); ++i) shifted[i] = p[i] + t.shift[i];
    out += f(shifted) * c;
  }
  return out;
}

LatticeFunction apply(const DifferenceOperator& op, const LatticeFunction& f) {
  return LatticeFunction::from_rule(f.rank(), f.value_nvars(),
                                    [op, f](const LatticePoint& p) { return apply(op, f, p); });
}

namespace {

CheckResult verdict(const WhittakerValue& residual, std::string detail = {}) {
  CheckResult res;
  WhittakerValue reduced = residual.map_coefficients([](const RationalFunctionQ& c) { return c.canonical(); });
  res.pass = reduced.is_zero();
  if (!res.pass) res.residual = laurent_to_json(reduced);
  res.detail = std::move(detail);
  return res;
}

}  // namespace

CheckResult eigencheck(int r, const LatticePoint& p) { return eigencheck(r, p, psi_function(p.size())); }

CheckResult eigencheck(int r, const LatticePoint& p, const LatticeFunction& psi) {
  int n = static_cast<int>(p.size());
  WhittakerValue lhs = apply(build_H(r, n), psi, p);
  return verdict(lhs - elementary_symmetric<RationalFunctionQ>(r, n) * psi(p));
}

CheckResult j_eigencheck(int r, const LatticePoint& p) { return j_eigencheck(r, p, psi_tilde_function(p.size())); }

CheckResult j_eigencheck(int r, const LatticePoint& p, const LatticeFunction& psi_tilde) {
  int n = static_cast<int>(p.size());
  WhittakerValue lhs = apply(build_J(r, n), psi_tilde, p);
  return verdict(lhs - elementary_symmetric<RationalFunctionQ>(r, n) * psi_tilde(p));
}

CheckResult conjugation_check(int r, const LatticePoint& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] >= p[i + 1]) throw std::invalid_argument("conjugation check needs a strictly increasing point");
  }
  int n = static_cast<int>(p.size());
  DifferenceOperator h = build_H(r, n);
  DifferenceOperator j = build_J(r, n);
  RationalFunctionQ delta(delta_factor(p));
  WhittakerValue residual(0);
  std::string detail;
  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    LatticePoint shifted = p;
    for (std::size_t i = 0; i < p.size(); ++i) shifted[i] += h.terms[t].shift[i];
    RationalFunctionQ diff =
        j.terms[t].coefficient(p) * RationalFunctionQ(delta_factor(shifted)) - delta * h.terms[t].coefficient(p);
    if (!diff.is_zero() && !diff.canonical().is_zero()) {
      residual.add_term({}, diff);
      detail = "term " + std::to_string(t);
    }
  }
  return verdict(residual, detail);
}

CheckResult commutativity_check(int r, int s, const LatticePoint& p, const LatticeFunction& f) {
  int n = static_cast<int>(p.size());
  DifferenceOperator hr = build_H(r, n);
  DifferenceOperator hs = build_H(s, n);
  return verdict(apply(hr, apply(hs, f), p) - apply(hs, apply(hr, f), p));
}

CheckResult intertwine_check(int k, const LatticePoint& upper, const LatticePoint& lower) {
  const int ell = static_cast<int>(lower.size());
  if (static_cast<int>(upper.size()) != ell + 1) throw std::invalid_argument("kernel rows must have lengths l+1 and l");
  if (k < 1 || k > ell + 1) throw std::out_of_range("intertwining index out of range");
  auto scalar = [](RationalFunctionQ c) { return Laurent<RationalFunctionQ>::constant(0, c); };

  auto kernel_upper = LatticeFunction::from_rule(
      ell + 1, 0, [&](const LatticePoint& u) { return scalar(kernel_q(u, lower)); });
  WhittakerValue lhs = apply(build_H(k, ell + 1), kernel_upper, upper);

  // The lower argument enters through the reflection m = -lower.
  auto kernel_lower = LatticeFunction::from_rule(ell, 0, [&](const LatticePoint& m) {
    LatticePoint l(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) l[i] = -m[i];
    return scalar(kernel_q(upper, l));
  });
  LatticePoint reflected(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) reflected[i] = -lower[i];
  WhittakerValue rhs = apply(build_H_tilde(k - 1, ell), kernel_lower, reflected) +
                       apply(build_H_tilde(k, ell), kernel_lower, reflected);
  return verdict(lhs - rhs);
}

namespace {

LatticePoint negate(const LatticePoint& p) {
  LatticePoint out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = -p[i];
  return out;
}

std::vector<LatticePoint> require_support(const LatticeFunction& f) {
  auto s = f.support();
  if (!s) throw std::invalid_argument("pairing needs finitely supported table functions");
  return *s;
}

}  // namespace

LatticeFunction::Value lattice_pairing(const LatticeFunction& f, const LatticeFunction& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("operator rank mismatch");
  LatticeFunction::Value out(f.value_nvars());
  for (const auto& s : require_support(f)) {
    LatticePoint p = negate(s);
    PolynomialQ w = delta_prime(p);
    if (w.is_zero()) continue;
    out += f(s) * g(p) * RationalFunctionQ(w);
  }
  return out;
}

CheckResult adjoint_check(const LatticeFunction& f, const LatticeFunction& g, int r) {
  if (f.rank() != g.rank() || f.value_nvars() != g.value_nvars()) throw std::invalid_argument("operator rank mismatch");
  const int ell = static_cast<int>(f.rank());
  DifferenceOperator h = build_H(r, ell);
  DifferenceOperator ht = build_H_tilde(r, ell);

  WhittakerValue lhs(f.value_nvars());
  for (const auto& s : require_support(f)) {
    LatticePoint p = negate(s);
    PolynomialQ w = delta_prime(p);
    if (w.is_zero()) continue;
    lhs += f(s) * apply(h, g, p) * RationalFunctionQ(w);
  }
  WhittakerValue rhs(f.value_nvars());
  for (const auto& p : require_support(g)) {
    PolynomialQ w = delta_prime(p);
    if (w.is_zero()) continue;
    rhs += apply(ht, f, negate(p)) * g(p) * RationalFunctionQ(w);
  }
  return verdict(lhs - rhs);
}

}  // namespace qwhit
