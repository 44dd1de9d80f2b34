#include "qwhit/macdonald/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qwhit/characters/characters.hpp"
#include "qwhit/exact/serialize.hpp"

namespace qwhit {

std::vector<Row> partitions(int d) {
  std::vector<Row> out;
  Row current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (d >= 0) rec(d, d);
  return out;
}

Row descending_partition(const Row& ascending) {
  Row out;
  for (int x : ascending) {
    if (x < 0) throw std::invalid_argument("partition with a negative part");
    if (x > 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

int size_of(const Row& partition) { return std::accumulate(partition.begin(), partition.end(), 0); }

Exponent padded(const Row& desc, std::size_t n) {
  Exponent e(desc.begin(), desc.end());
  e.resize(n, 0);
  return e;
}

SymmetricPolynomial monomial_sym_desc(const Row& desc, std::size_t n) {
  if (desc.size() > n) throw std::invalid_argument("partition does not fit in the variable count");
  SymmetricPolynomial out(n);
  Exponent e = padded(desc, n);
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, RationalFunctionQT(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

// Transition data at a fixed degree: m_L = sum_M minv[L][M] p_M.
struct DegreeData {
  std::vector<Row> parts;
  std::map<Row, std::size_t> index;
  std::vector<std::vector<Rational>> minv;
  std::vector<RationalFunctionQT> z;
};

DegreeData build_degree(int d) {
  DegreeData data;
  data.parts = partitions(d);
  const std::size_t k = data.parts.size();
  for (std::size_t i = 0; i < k; ++i) data.index[data.parts[i]] = i;
  const std::size_t nv = static_cast<std::size_t>(std::max(d, 1));

  // M[mu][lambda] = coefficient of x^lambda in p_mu.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t mu = 0; mu < k; ++mu) {
    Laurent<Integer> p = Laurent<Integer>::constant(nv, 1);
    for (int part : data.parts[mu]) {
      Laurent<Integer> sum(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        Exponent e(nv, 0);
        e[v] = part;
        sum.add_term(e, Integer(1));
      }
      p = p * sum;
    }
    for (std::size_t lam = 0; lam < k; ++lam) m[mu][lam] = Rational(p.coefficient_of(padded(data.parts[lam], nv)));
  }
  // Gauss-Jordan inverse over Q.
  std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && sgn(m[piv][col]) == 0) ++piv;
    if (piv == k) throw std::logic_error("singular power-sum transition");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / m[col][col];
    for (std::size_t j = 0; j < k; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  data.minv = std::move(inv);
  for (const auto& part : data.parts) data.z.push_back(z_qt(part));
  return data;
}

const DegreeData& degree_data(int d) {
  static std::mutex mutex;
  static std::map<int, DegreeData> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_degree(d)).first;
  return it->second;
}

int coords_degree(const SymCoords& c) {
  int d = -1;
  for (const auto& [part, v] : c) {
    int s = size_of(part);
    if (d >= 0 && s != d) throw std::invalid_argument("symmetric function is not homogeneous");
    d = s;
  }
  return d;
}

PolynomialQT divide_exactly(const PolynomialQT& a, const PolynomialQT& b) {
  auto quotient = exact_quotient(a, b);
  if (!quotient) throw std::logic_error("inexact division in fraction-free elimination");
  return *quotient;
}

// Solves A x = b over Q(q,t). Rows are cleared of denominators and then
// eliminated fraction-free (Bareiss), which keeps entries polynomial and
// avoids a gcd per arithmetic step.
std::vector<RationalFunctionQT> solve(const std::vector<std::vector<RationalFunctionQT>>& a,
                                      const std::vector<RationalFunctionQT>& b) {
  const std::size_t k = b.size();
  std::vector<std::vector<PolynomialQT>> m(k, std::vector<PolynomialQT>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<const RationalFunctionQT*> row;
    for (std::size_t j = 0; j < k; ++j) row.push_back(&a[i][j]);
    row.push_back(&b[i]);
    PolynomialQT l(1);
    for (const auto* x : row) {
      const PolynomialQT& d = x->denominator();
      l = divide_exactly(l * d, poly_gcd(l, d));
    }
    for (std::size_t j = 0; j <= k; ++j) m[i][j] = row[j]->numerator() * divide_exactly(l, row[j]->denominator());
  }
  PolynomialQT prev(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) throw std::logic_error("singular Gram matrix");
    std::swap(m[piv], m[col]);
    for (std::size_t i = col + 1; i < k; ++i) {
      for (std::size_t j = col + 1; j <= k; ++j) {
        m[i][j] = divide_exactly(m[i][j] * m[col][col] - m[i][col] * m[col][j], prev);
      }
      m[i][col] = PolynomialQT();
    }
    prev = m[col][col];
  }
  std::vector<RationalFunctionQT> x(k);
  for (std::size_t i = k; i-- > 0;) {
    RationalFunctionQT s(m[i][k]);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!m[i][j].is_zero()) s -= RationalFunctionQT(m[i][j]) * x[j];
    }
    x[i] = s / RationalFunctionQT(m[i][i]);
  }
  return x;
}

RationalFunctionQT t_pow(int k) { return RationalFunctionQT(PolynomialQT::t().pow(static_cast<unsigned>(k))); }
RationalFunctionQT q_pow(int k) { return RationalFunctionQT(PolynomialQT::q().pow(static_cast<unsigned>(k))); }

SymmetricPolynomial linear(std::size_t n, std::size_t a, const RationalFunctionQT& ca, std::size_t b,
                           const RationalFunctionQT& cb) {
  SymmetricPolynomial out(n);
  Exponent e(n, 0);
  e[a] = 1;
  out.add_term(e, ca);
  e[a] = 0;
  e[b] = 1;
  out.add_term(e, cb);
  return out;
}

// Exact division by x_a - x_b; throws if it leaves a remainder.
SymmetricPolynomial divide_by_difference(const SymmetricPolynomial& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.nvars();
  std::map<int, SymmetricPolynomial> groups;
  for (const auto& [e, c] : p.terms()) {
    if (e[a] < 0) throw std::logic_error("negative exponent in polynomial division");
    Exponent rest = e;
    rest[a] = 0;
    auto it = groups.try_emplace(e[a], SymmetricPolynomial(n)).first;
    it->second.add_term(rest, c);
  }
  SymmetricPolynomial out(n);
  if (groups.empty()) return out;
  Exponent xb(n, 0);
  xb[b] = 1;
  SymmetricPolynomial carry(n);
  for (int k = groups.rbegin()->first; k >= 1; --k) {
    auto it = groups.find(k);
    if (it != groups.end()) carry += it->second;
    // carry is the quotient coefficient of x_a^{k-1}.
    Exponent shift(n, 0);
    shift[a] = k - 1;
    out += carry.times_monomial(shift);
    carry = carry.times_monomial(xb);
  }
  auto it0 = groups.find(0);
  if (it0 != groups.end()) carry += it0->second;
  if (!carry.is_zero()) throw std::logic_error("Macdonald operator produced a non-polynomial result");
  return out;
}

}  // namespace

SymmetricPolynomial monomial_sym(const Row& ascending, std::size_t n) {
  return monomial_sym_desc(descending_partition(ascending), n);
}

SymmetricPolynomial power_sum_product(const Row& ascending, std::size_t n) {
  SymmetricPolynomial out = SymmetricPolynomial::constant(n, 1);
  for (int part : descending_partition(ascending)) {
    SymmetricPolynomial sum(n);
    for (std::size_t v = 0; v < n; ++v) {
      Exponent e(n, 0);
      e[v] = part;
      sum.add_term(e, RationalFunctionQT(1));
    }
    out = out * sum;
  }
  return out;
}

RationalFunctionQT z_qt(const Row& partition) {
  Row desc = descending_partition(partition);
  Integer pre = 1;
  std::map<int, int> mult;
  for (int x : desc) ++mult[x];
  for (auto [part, m] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    pre *= f * pw;
  }
  RationalFunctionQT out{Rational(pre)};
  for (int x : desc) {
    out *= RationalFunctionQT(PolynomialQT(1) - PolynomialQT::q().pow(x), PolynomialQT(1) - PolynomialQT::t().pow(x));
  }
  return out;
}

SymCoords power_sum_coordinates(const SymCoords& m_coords) {
  SymCoords out;
  int d = coords_degree(m_coords);
  if (d < 0) return out;
  const DegreeData& data = degree_data(d);
  for (const auto& [lam, c] : m_coords) {
    const auto& row = data.minv[data.index.at(lam)];
    for (std::size_t mu = 0; mu < row.size(); ++mu) {
      if (sgn(row[mu]) == 0) continue;
      out[data.parts[mu]] += c * RationalFunctionQT(row[mu]);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

RationalFunctionQT inner_product_coords(const SymCoords& a, const SymCoords& b) {
  int da = coords_degree(a);
  int db = coords_degree(b);
  if (da < 0 || db < 0 || da != db) return RationalFunctionQT();
  SymCoords pa = power_sum_coordinates(a);
  SymCoords pb = power_sum_coordinates(b);
  RationalFunctionQT out;
  for (const auto& [mu, c] : pa) {
    auto it = pb.find(mu);
    if (it != pb.end()) out += c * it->second * z_qt(mu);
  }
  return out;
}

SymCoords monomial_coordinates(const SymmetricPolynomial& f) {
  SymCoords out;
  for (const auto& [e, c] : f.terms()) {
    Row sorted(e.begin(), e.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != Row(e.begin(), e.end())) continue;
    out[descending_partition(sorted)] = c;
  }
  if (!(restrict_to(out, f.nvars()) == f)) throw std::invalid_argument("polynomial is not symmetric");
  return out;
}

RationalFunctionQT inner_product_qt(const SymmetricPolynomial& f, const SymmetricPolynomial& g, std::size_t n,
                                    int degree_bound) {
  if (f.nvars() != n || g.nvars() != n) throw std::invalid_argument("variable count mismatch");
  SymCoords a = monomial_coordinates(f);
  SymCoords b = monomial_coordinates(g);
  int d = std::max(coords_degree(a), coords_degree(b));
  if (d > degree_bound) throw std::invalid_argument("degree exceeds the configured bound");
  if (d > static_cast<int>(n)) {
    throw std::invalid_argument("degree too large for faithful power-sum expansion in " + std::to_string(n) +
                                " variables");
  }
  return inner_product_coords(a, b);
}

SymmetricPolynomial restrict_to(const SymCoords& coords, std::size_t n) {
  SymmetricPolynomial out(n);
  for (const auto& [lam, c] : coords) {
    if (lam.size() > n) continue;
    SymmetricPolynomial m = monomial_sym_desc(lam, n);
    m *= c;
    out += m;
  }
  return out;
}

SymCoords macdonald_coords(const Row& ascending) {
  static std::mutex mutex;
  static std::map<Row, SymCoords> cache;
  Row lam = descending_partition(ascending);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  const DegreeData& data = degree_data(size_of(lam));
  const std::size_t top = data.index.at(lam);
  std::vector<Row> lower(data.parts.begin() + static_cast<long>(top) + 1, data.parts.end());
  auto gram = [&](const Row& x, const Row& y) {
    return inner_product_coords(SymCoords{{x, RationalFunctionQT(1)}}, SymCoords{{y, RationalFunctionQT(1)}});
  };
  const std::size_t k = lower.size();
  std::vector<std::vector<RationalFunctionQT>> a(k, std::vector<RationalFunctionQT>(k));
  std::vector<RationalFunctionQT> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = gram(lower[j], lower[i]);
    b[i] = -gram(lam, lower[i]);
  }
  std::vector<RationalFunctionQT> u = k ? solve(a, b) : std::vector<RationalFunctionQT>{};
  SymCoords out{{lam, RationalFunctionQT(1)}};
  for (std::size_t i = 0; i < k; ++i) {
    if (!u[i].is_zero()) out[lower[i]] = u[i];
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lam, std::move(out)).first->second;
}

SymmetricPolynomial macdonald_poly(const Row& ascending, std::size_t n) {
  if (descending_partition(ascending).size() > n) throw std::invalid_argument("partition does not fit in the variable count");
  return restrict_to(macdonald_coords(ascending), n);
}

SymmetricPolynomial macdonald_operator_apply(int r, std::size_t n, const SymmetricPolynomial& f) {
  if (r < 1 || r > static_cast<int>(n)) throw std::out_of_range("Macdonald operator index out of range");
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  const RationalFunctionQT t(PolynomialQT::t());
  SymmetricPolynomial numerator(n);
  for (const auto& subset : ordered_subsets(static_cast<int>(n), r)) {
    std::vector<bool> in(n, false);
    for (int i : subset) in[i - 1] = true;
    SymmetricPolynomial shifted(n);
    for (const auto& [e, c] : f.terms()) {
      int power = 0;
      for (std::size_t i = 0; i < n; ++i) power += in[i] ? e[i] : 0;
      shifted.add_term(e, c * q_pow(power));
    }
    SymmetricPolynomial term = shifted;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (in[i] && !in[j]) {
          term = term * linear(n, i, t, j, RationalFunctionQT(-1));
          if (i > j) ++inversions;
        }
        if (i < j && in[i] == in[j]) term = term * linear(n, i, RationalFunctionQT(1), j, RationalFunctionQT(-1));
      }
    }
    RationalFunctionQT scale = t_pow(r * (r - 1) / 2);
    if (inversions % 2) scale = -scale;
    term *= scale;
    numerator += term;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) numerator = divide_by_difference(numerator, a, b);
  }
  return numerator;
}

RationalFunctionQT macdonald_eigenvalue(const Row& ascending, int r, std::size_t n) {
  Exponent lam = padded(descending_partition(ascending), n);
  RationalFunctionQT out;
  for (const auto& subset : ordered_subsets(static_cast<int>(n), r)) {
    RationalFunctionQT term(1);
    for (int i : subset) term *= q_pow(lam[i - 1]) * t_pow(static_cast<int>(n) - i);
    out += term;
  }
  return out;
}

namespace {

CheckResult verdict(const SymmetricPolynomial& residual, std::string detail = {}) {
  CheckResult res;
  res.pass = residual.is_zero();
  if (!res.pass) res.residual = laurent_to_json(residual);
  res.detail = std::move(detail);
  return res;
}

}  // namespace

MacdonaldEigenResult macdonald_eigencheck(const Row& ascending, int r, std::size_t n) {
  SymmetricPolynomial p = macdonald_poly(ascending, n);
  SymmetricPolynomial hp = macdonald_operator_apply(r, n, p);
  Exponent lead = padded(descending_partition(ascending), n);
  RationalFunctionQT c = hp.coefficient_of(lead) / p.coefficient_of(lead);
  SymmetricPolynomial scaled = p;
  scaled *= c;
  MacdonaldEigenResult out{verdict(hp - scaled), c, macdonald_eigenvalue(ascending, r, n)};
  if (out.check.pass && !(out.measured == out.predicted)) {
    out.check.pass = false;
    out.check.residual = coefficient_to_json(out.measured - out.predicted);
    out.check.detail = "measured eigenvalue differs from the formula";
  }
  return out;
}

CheckResult generating_series_check(const Row& ascending, std::size_t n) {
  SymmetricPolynomial p = macdonald_poly(ascending, n);
  Exponent lead = padded(descending_partition(ascending), n);
  std::vector<RationalFunctionQT> measured(n + 1);
  for (std::size_t r = 1; r <= n; ++r) {
    SymmetricPolynomial hp = macdonald_operator_apply(static_cast<int>(r), n, p);
    measured[r] = hp.coefficient_of(lead);
    SymmetricPolynomial scaled = p;
    scaled *= measured[r];
    CheckResult proportional = verdict(hp - scaled, "H_" + std::to_string(r) + " P is not proportional to P");
    if (!proportional.pass) return proportional;
  }
  Exponent parts = lead;
  std::sort(parts.begin(), parts.end());
  do {
    std::vector<RationalFunctionQT> e(n + 1);
    e[0] = RationalFunctionQT(1);
    for (std::size_t i = 0; i < n; ++i) {
      RationalFunctionQT a = q_pow(parts[i]) * t_pow(static_cast<int>(n - 1 - i));
      for (std::size_t r = i + 1; r >= 1; --r) e[r] += a * e[r - 1];
    }
    if (!(e[1] == measured[1])) continue;
    CheckResult res;
    std::string pairing;
    for (int x : parts) pairing += (pairing.empty() ? "" : ",") + std::to_string(x);
    res.detail = "parts paired with t^(n-1..0): (" + pairing + ")";
    for (std::size_t r = 2; r <= n; ++r) {
      if (!(e[r] == measured[r])) {
        res.pass = false;
        res.residual = coefficient_to_json(measured[r] - e[r]);
        res.detail += "; fails at r = " + std::to_string(r);
        return res;
      }
    }
    return res;
  } while (std::next_permutation(parts.begin(), parts.end()));
  CheckResult res;
  res.pass = false;
  res.detail = "no pairing of parts reproduces the rank-1 eigenvalue";
  res.residual = coefficient_to_json(measured[1]);
  return res;
}

CheckResult orthogonality_check(int d, std::size_t max_parts) {
  std::vector<Row> parts;
  for (const auto& p : partitions(d)) {
    if (p.size() <= max_parts) parts.push_back(p);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      RationalFunctionQT v = inner_product_coords(macdonald_coords(parts[i]), macdonald_coords(parts[j]));
      if (!v.is_zero()) {
        CheckResult res;
        res.pass = false;
        res.residual = coefficient_to_json(v);
        res.detail = "pair " + std::to_string(i) + "," + std::to_string(j);
        return res;
      }
    }
  }
  return {};
}

CheckResult schur_specialization_check(const Row& ascending, std::size_t n) {
  SymmetricPolynomial p = macdonald_poly(ascending, n);
  Laurent<Rational> at_q = p.map_coefficients([](const RationalFunctionQT& c) -> Rational {
    RationalFunctionQ v = c.at_t_equals_q().canonical();
    if (!v.is_polynomial() || v.numerator().degree() > 0) {
      throw std::domain_error("coefficient depends on q after t = q: " + v.str());
    }
    return v.numerator().coeff(0) / v.denominator().coeff(0);
  });
  Row top = to_ascending(descending_partition(ascending));
  top.insert(top.begin(), n - top.size(), 0);
  Laurent<Rational> diff = at_q - to_rational(char_gz(top));
  CheckResult res;
  res.pass = diff.is_zero();
  if (!res.pass) res.residual = laurent_to_json(diff);
  return res;
}

}  // namespace qwhit
