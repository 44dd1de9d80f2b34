#include "qwhit/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "qwhit/characters/characters.hpp"
#include "qwhit/exact/eval.hpp"
#include "qwhit/exact/serialize.hpp"
#include "qwhit/macdonald/degeneration.hpp"
#include "qwhit/macdonald/macdonald.hpp"
#include "qwhit/toda/operators.hpp"

namespace qwhit {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{{"check", check}, {"params", params}, {"status", status}, {"wall_time_ms", wall_time_ms}};
  if (status == "fail") j["residual"] = residual;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eigen",    "recursion", "intertwine", "adjoint", "pieri",
                                              "branching", "cauchy",    "q0",         "q1",      "positivity",
                                              "macdonald", "degenerate", "all"};
  return names;
}

std::vector<std::vector<int>> window_points(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (n <= 0 || lo > hi) return out;
  std::vector<int> p(n, lo);
  while (true) {
    out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

std::vector<double> default_sample(int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 / (std::ldexp(1.0, i + 1) - 1);
  return x;
}

namespace {

using Task = std::function<VerificationReport()>;

template <class F>
Task task(std::string check, nlohmann::json params, F f) {
  return [check = std::move(check), params = std::move(params), f = std::move(f)]() {
    VerificationReport rep{check, params, "pass", nullptr, "", 0};
    auto start = std::chrono::steady_clock::now();
    try {
      CheckResult res = f();
      rep.status = res.pass ? "pass" : "fail";
      if (!res.pass) rep.residual = res.residual.is_null() ? nlohmann::json("nonzero") : res.residual;
      rep.detail = res.detail;
    } catch (const std::exception& e) {
      rep.status = "error";
      rep.detail = e.what();
    }
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<VerificationReport> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<std::vector<int>> sorted_points(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (auto& p : window_points(n, lo, hi)) {
    if (is_weakly_increasing(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> grid(const RunConfig& c) {
  if (!c.point.empty()) return {c.point};
  return window_points(c.rank, c.window_lo, c.window_hi);
}

std::vector<std::vector<int>> sorted_grid(const RunConfig& c) {
  if (!c.point.empty()) return is_weakly_increasing(c.point) ? std::vector<std::vector<int>>{c.point}
                                                             : std::vector<std::vector<int>>{};
  return sorted_points(c.rank, c.window_lo, c.window_hi);
}

CheckResult fail_with(nlohmann::json residual, std::string detail) {
  CheckResult r;
  r.pass = false;
  r.residual = std::move(residual);
  r.detail = std::move(detail);
  return r;
}

void add_eigen(std::vector<Task>& tasks, const RunConfig& c) {
  const int n = c.rank;
  LatticeFunction psi = psi_function(n);
  LatticeFunction tilde = psi_tilde_function(n);
  for (const auto& p : grid(c)) {
    for (int r = 1; r <= n; ++r) {
      tasks.push_back(task("eigen", {{"n", n}, {"r", r}, {"p", p}}, [=] { return eigencheck(r, p, psi); }));
    }
  }
  for (const auto& p : sorted_grid(c)) {
    for (int r = 1; r <= n; ++r) {
      tasks.push_back(task("j_eigen", {{"n", n}, {"r", r}, {"p", p}}, [=] { return j_eigencheck(r, p, tilde); }));
    }
    bool strict = true;
    for (int i = 0; i + 1 < n; ++i) strict = strict && p[i] < p[i + 1];
    if (!strict) continue;
    for (int r = 1; r <= n; ++r) {
      tasks.push_back(task("conjugation", {{"n", n}, {"r", r}, {"p", p}}, [=] { return conjugation_check(r, p); }));
    }
  }
}

void add_recursion(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& p : grid(c)) {
    tasks.push_back(task("recursion", {{"n", c.rank}, {"p", p}}, [=] {
      WhittakerValue diff = psi_recursive(p) - psi_direct(p);
      diff = diff.map_coefficients([](const RationalFunctionQ& x) { return x.canonical(); });
      return diff.is_zero() ? CheckResult{} : fail_with(laurent_to_json(diff), "");
    }));
  }
}

void add_intertwine(std::vector<Task>& tasks, const RunConfig& c) {
  const int ell = c.rank - 1;
  if (ell < 1) throw std::invalid_argument("intertwining needs rank at least 2");
  auto uppers = c.point.empty() ? window_points(ell + 1, c.window_lo, c.window_hi) : std::vector<std::vector<int>>{c.point};
  for (const auto& u : uppers) {
    for (const auto& l : window_points(ell, c.window_lo, c.window_hi)) {
      for (int k = 1; k <= ell + 1; ++k) {
        tasks.push_back(task("intertwine", {{"l", ell}, {"k", k}, {"upper", u}, {"lower", l}},
                             [=] { return intertwine_check(k, u, l); }));
      }
    }
  }
}

void add_adjoint(std::vector<Task>& tasks, const RunConfig& c) {
  const int ell = c.rank;
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<int> value(-3, 3);
  auto cone = sorted_points(ell, c.window_lo, c.window_hi);
  const int trials = 4;
  for (int trial = 0; trial < trials; ++trial) {
    LatticeFunction::Table f_table;
    LatticeFunction::Table g_table;
    for (const auto& p : cone) {
      std::vector<int> reflected(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) reflected[i] = -p[i];
      f_table.emplace(reflected, WhittakerValue::constant(0, RationalFunctionQ(value(rng))));
      g_table.emplace(p, WhittakerValue::constant(0, RationalFunctionQ(value(rng))));
    }
    auto f = LatticeFunction::from_table(ell, 0, f_table);
    auto g = LatticeFunction::from_table(ell, 0, g_table);
    for (int r = 1; r <= ell; ++r) {
      tasks.push_back(task("adjoint", {{"l", ell}, {"r", r}, {"seed", c.seed}, {"trial", trial}},
                           [=] { return adjoint_check(f, g, r); }));
    }
  }
}

std::vector<std::vector<int>> part_tops(const RunConfig& c) {
  if (!c.point.empty()) return {c.point};
  return sorted_points(c.rank, 0, c.max_part);
}

void add_pieri(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& top : part_tops(c)) {
    for (int r = 1; r <= c.rank; ++r) {
      tasks.push_back(task("pieri", {{"n", c.rank}, {"r", r}, {"top", top}}, [=] { return pieri_check(r, top); }));
    }
  }
}

void add_branching(std::vector<Task>& tasks, const RunConfig& c) {
  if (c.rank < 2) throw std::invalid_argument("branching needs rank at least 2");
  for (const auto& top : part_tops(c)) {
    tasks.push_back(task("branching", {{"n", c.rank}, {"top", top}}, [=] { return branching_check(top); }));
    if (c.rank <= 3) {
      int need = 0;
      for (int x : top) need += x - top[0];
      tasks.push_back(task("constant_term", {{"n", c.rank}, {"top", top}, {"D", need}},
                           [=] { return constant_term_branching(top, need); }));
    }
  }
}

void add_cauchy(std::vector<Task>& tasks, const RunConfig& c) {
  for (int m = 1; m <= std::min(c.rank, 2); ++m) {
    for (int d = 0; d <= c.degree_bound; ++d) {
      tasks.push_back(task("cauchy", {{"n", c.rank}, {"m", m}, {"D", d}}, [=, n = c.rank] { return cauchy_check(n, m, d); }));
    }
  }
}

void add_q0(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& p : grid(c)) {
    tasks.push_back(task("q0", {{"n", c.rank}, {"p", p}}, [=] { return q0_limit_check(p); }));
  }
}

void add_q1(std::vector<Task>& tasks, const RunConfig& c) {
  const int n = c.rank;
  for (const auto& p : sorted_grid(c)) {
    tasks.push_back(task("q1_limit", {{"n", n}, {"p", p}}, [=] { return q1_limit_check(p); }));
    for (int r = 1; r <= n; ++r) {
      tasks.push_back(task("h_eigen", {{"n", n}, {"r", r}, {"p", p}}, [=] { return h_eigencheck(r, p); }));
    }
    if (n >= 2) tasks.push_back(task("q1_recursion", {{"n", n}, {"p", p}}, [=] { return q1_recursion_check(p); }));
    if (p[0] >= 0) tasks.push_back(task("dimension", {{"n", n}, {"p", p}}, [=] { return dimension_check(p); }));
  }
}

void add_positivity(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& p : sorted_grid(c)) {
    tasks.push_back(task("positivity", {{"n", c.rank}, {"p", p}}, [=] {
      TildeValue tilde = psi_tilde(p);
      for (const auto& [e, coeff] : tilde.terms()) {
        for (const auto& a : coeff.coeffs()) {
          if (a.get_den() != 1 || sgn(a) < 0) return fail_with(laurent_to_json(tilde), "coefficient outside N[q]");
        }
      }
      WhittakerValue diff = psi_direct(p);
      diff *= RationalFunctionQ(delta_factor(p));
      diff -= tilde.map_coefficients([](const PolynomialQ& x) { return RationalFunctionQ(x); });
      diff = diff.map_coefficients([](const RationalFunctionQ& x) { return x.canonical(); });
      return diff.is_zero() ? CheckResult{} : fail_with(laurent_to_json(diff), "psi_tilde differs from delta * psi");
    }));
  }
}

void add_macdonald(std::vector<Task>& tasks, const RunConfig& c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  for (int d = 0; d <= c.degree_bound; ++d) {
    tasks.push_back(task("macdonald_orthogonality", {{"degree", d}, {"max_parts", n}},
                         [=] { return orthogonality_check(d, n); }));
    for (const auto& lam : partitions(d)) {
      if (lam.size() > n) continue;
      Row asc = to_ascending(lam);
      nlohmann::json params{{"n", n}, {"partition", asc}};
      tasks.push_back(task("macdonald_schur", params, [=] { return schur_specialization_check(asc, n); }));
      tasks.push_back(task("macdonald_generating", params, [=] { return generating_series_check(asc, n); }));
      for (int r = 1; r <= c.rank; ++r) {
        nlohmann::json pr = params;
        pr["r"] = r;
        tasks.push_back(task("macdonald_eigen", pr, [=] { return macdonald_eigencheck(asc, r, n).check; }));
      }
    }
  }
}

void add_degenerate(std::vector<Task>& tasks, const RunConfig& c) {
  std::vector<double> x = c.sample.empty() ? default_sample(c.rank) : c.sample;
  for (int r = 1; r <= c.rank; ++r) {
    tasks.push_back(task("degenerate", {{"n", c.rank}, {"r", r}, {"q", c.q_value}, {"k", c.k_list}, {"x", x}},
                         [=] {
                           ConvergenceReport rep = toda_degeneration_check(r, c.rank, c.q_value, c.k_list, x);
                           CheckResult res;
                           res.pass = rep.pass;
                           if (!rep.pass) res.residual = rep.to_json();
                           res.detail = rep.detail;
                           return res;
                         }));
  }
  tasks.push_back(task("kernel_limit", {{"q", c.q_value}, {"k", 5}, {"w", 0.25}}, [=] {
    CheckResult res;
    for (const auto& rep : kernel_limit_check(c.q_value, 5, 0.25, {10, 20, 40, 60})) {
      if (!rep.pass) return fail_with(rep.to_json(), rep.name);
    }
    return res;
  }));
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& suite, const RunConfig& config) {
  using Adder = void (*)(std::vector<Task>&, const RunConfig&);
  static const std::vector<std::pair<std::string, Adder>> adders{
      {"eigen", add_eigen},       {"recursion", add_recursion}, {"intertwine", add_intertwine},
      {"adjoint", add_adjoint},   {"pieri", add_pieri},         {"branching", add_branching},
      {"cauchy", add_cauchy},     {"q0", add_q0},               {"q1", add_q1},
      {"positivity", add_positivity}, {"macdonald", add_macdonald}, {"degenerate", add_degenerate}};
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, add] : adders) {
    if (suite == name || suite == "all") {
      if (suite == "all" && name == "macdonald" && config.rank > 3) continue;
      if (suite == "all" && (name == "intertwine" || name == "branching") && config.rank < 2) continue;
      add(tasks, config);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown suite: " + suite);
  return run_tasks(tasks, config.threads);
}

}  // namespace qwhit
