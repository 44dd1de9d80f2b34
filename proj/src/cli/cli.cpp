#include "qwhit/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwhit/characters/characters.hpp"
#include "qwhit/cli/suites.hpp"
#include "qwhit/exact/serialize.hpp"
#include "qwhit/macdonald/degeneration.hpp"
#include "qwhit/macdonald/macdonald.hpp"
#include "qwhit/whittaker/whittaker.hpp"

namespace qwhit {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::string to_string(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

int max_rank() {
  const char* env = std::getenv("QWHIT_MAX_RANK");
  if (!env || !*env) return 4;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError("QWHIT_MAX_RANK is not an integer");
  }
}

void parse_window(const std::string& text, RunConfig& c) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("window must look like a..b");
  try {
    std::size_t used = 0;
    c.window_lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad window bound");
    std::string hi = text.substr(dots + 2);
    c.window_hi = std::stoi(hi, &used);
    if (used != hi.size()) throw UsageError("bad window bound");
  } catch (const std::logic_error&) {
    throw UsageError("window bounds must be integers");
  }
  if (c.window_lo > c.window_hi) throw UsageError("window is empty");
}

void validate(RunConfig& c, bool rank_given) {
  if (!c.point.empty()) {
    if (!rank_given) c.rank = static_cast<int>(c.point.size());
    if (static_cast<int>(c.point.size()) != c.rank) throw UsageError("point length differs from rank");
  }
  if (c.rank < 1) throw UsageError("rank must be at least 1");
  if (c.rank > max_rank()) throw UsageError("rank exceeds the cap " + std::to_string(max_rank()));
  if (c.max_part < 0 || c.degree_bound < 0) throw UsageError("bounds must be nonnegative");
  if (c.format != "json" && c.format != "csv" && c.format != "pretty") throw UsageError("unknown format");
}

// CLI11 reads "-1..3" and "-1,0" as flags; glue them to their option instead.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool takes_value = a == "--window" || a == "-p" || a == "--point" || a == "-k" || a == "--k-list" ||
                       a == "--sample";
    if (takes_value && i + 1 < argc && argv[i + 1][0] == '-' && argv[i + 1][1] != '-') {
      args.push_back((a.size() == 2 ? a : a + "=") + argv[++i]);
      continue;
    }
    args.push_back(a);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

std::vector<std::vector<int>> eval_points(const RunConfig& c) {
  if (!c.point.empty()) return {c.point};
  return window_points(c.rank, c.window_lo, c.window_hi);
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out) {
  std::size_t passed = 0, failed = 0, errored = 0;
  for (const auto& r : reports) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else ++errored;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    json summary{{"total", reports.size()}, {"pass", passed}, {"fail", failed}, {"error", errored}};
    out << json{{"reports", arr}, {"summary", summary}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "check,params,status,wall_time_ms,detail\n";
    for (const auto& r : reports) {
      out << r.check << "," << csv_quote(r.params.dump()) << "," << r.status << "," << r.wall_time_ms << ","
          << csv_quote(r.detail) << "\n";
    }
  } else {
    for (const auto& r : reports) {
      if (r.status == "pass") continue;
      out << r.status << "  " << r.check << " " << r.params.dump();
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
    out << reports.size() << " checks: " << passed << " pass, " << failed << " fail, " << errored << " error\n";
  }
  return failed + errored == 0 ? 0 : 1;
}

int cmd_whittaker_eval(const RunConfig& c, std::ostream& out) {
  auto points = eval_points(c);
  json values = json::array();
  for (const auto& p : points) {
    WhittakerValue psi = psi_direct(p);
    TildeValue tilde = psi_tilde(p);
    if (c.format == "json") {
      values.push_back({{"rank", c.rank}, {"p", p}, {"psi", laurent_to_json(psi)}, {"psi_tilde", laurent_to_json(tilde)}});
    } else if (c.format == "csv") {
      if (&p == &points.front()) out << "p,psi,psi_tilde\n";
      out << csv_quote(join(p)) << "," << csv_quote(to_string(psi)) << "," << csv_quote(to_string(tilde)) << "\n";
    } else {
      out << "p = (" << join(p, ", ") << ")\n  psi       = " << psi << "\n  psi_tilde = " << tilde << "\n";
    }
  }
  if (c.format == "json") out << (c.point.empty() ? values : values.front()).dump(2) << "\n";
  return 0;
}

int cmd_char_eval(const RunConfig& c, std::ostream& out) {
  auto points = eval_points(c);
  json values = json::array();
  for (const auto& p : points) {
    Character chi = is_weakly_increasing(p) ? char_gz(p) : Character(p.size());
    if (c.format == "json") {
      values.push_back({{"rank", c.rank}, {"p", p}, {"character", laurent_to_json(chi)}});
    } else if (c.format == "csv") {
      if (&p == &points.front()) out << "p,character\n";
      out << csv_quote(join(p)) << "," << csv_quote(to_string(chi)) << "\n";
    } else {
      out << "p = (" << join(p, ", ") << ")\n  chi = " << chi << "\n";
    }
  }
  if (c.format == "json") out << (c.point.empty() ? values : values.front()).dump(2) << "\n";
  return 0;
}

Row partition_arg(const RunConfig& c) {
  if (c.point.empty()) throw UsageError("macdonald commands need a partition via -p");
  Row asc = c.point;
  for (int x : asc) {
    if (x < 0) throw UsageError("partition entries must be nonnegative");
  }
  std::sort(asc.begin(), asc.end());
  return asc;
}

int cmd_macdonald_poly(const RunConfig& c, std::ostream& out) {
  Row asc = partition_arg(c);
  SymmetricPolynomial P = macdonald_poly(asc, asc.size());
  if (c.format == "json") {
    out << json{{"n", asc.size()}, {"partition", descending_partition(asc)}, {"poly", laurent_to_json(P)}}.dump(2)
        << "\n";
  } else {
    out << "P_(" << join(descending_partition(asc)) << ") = " << P << "\n";
  }
  return 0;
}

int cmd_macdonald_eigen(const RunConfig& c, std::ostream& out) {
  Row asc = partition_arg(c);
  const std::size_t n = asc.size();
  json rows = json::array();
  bool ok = true;
  for (int r = 1; r <= static_cast<int>(n); ++r) {
    MacdonaldEigenResult res = macdonald_eigencheck(asc, r, n);
    ok = ok && res.check.pass;
    if (c.format == "json") {
      rows.push_back({{"r", r},
                      {"status", res.check.pass ? "pass" : "fail"},
                      {"measured", coefficient_to_json(res.measured)},
                      {"predicted", coefficient_to_json(res.predicted)}});
    } else {
      out << "r = " << r << ": " << (res.check.pass ? "pass" : "fail") << "  eigenvalue " << res.predicted << "\n";
    }
  }
  if (c.format == "json") {
    out << json{{"n", n}, {"partition", descending_partition(asc)}, {"eigen", rows}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_macdonald_degenerate(const RunConfig& c, std::ostream& out) {
  std::vector<double> x = c.sample.empty() ? default_sample(c.rank) : c.sample;
  if (static_cast<int>(x.size()) != c.rank) throw UsageError("sample length differs from rank");
  if (!(c.q_value > 0 && c.q_value < 1)) throw UsageError("q must lie in (0, 1)");
  json rows = json::array();
  bool ok = true;
  for (int r = 1; r <= c.rank; ++r) {
    ConvergenceReport rep = toda_degeneration_check(r, c.rank, c.q_value, c.k_list, x);
    ok = ok && rep.pass;
    if (c.format == "json") {
      rows.push_back(rep.to_json());
    } else {
      out << rep.name << ": " << (rep.pass ? "pass" : "fail");
      for (std::size_t i = 0; i < rep.steps.size(); ++i) out << "  k=" << rep.steps[i] << ":" << rep.deviation[i];
      out << "\n";
    }
  }
  if (c.format == "json") out << json{{"n", c.rank}, {"q", c.q_value}, {"reports", rows}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

void add_common(CLI::App* app, RunConfig& c, std::string& window) {
  app->add_option("-n,--rank", c.rank, "rank n");
  app->add_option("-p,--point", c.point, "lattice point or partition, comma separated")->delimiter(',');
  app->add_option("--window", window, "per-coordinate range a..b");
  app->add_option("--max-part", c.max_part, "largest part for character grids");
  app->add_option("--degree-bound", c.degree_bound, "degree bound for series and Macdonald grids");
  app->add_option("-q,--q-value", c.q_value, "numeric q for the degeneration");
  app->add_option("-k,--k-list", c.k_list, "k values for the degeneration")->delimiter(',');
  app->add_option("--sample", c.sample, "sample point x for the degeneration")->delimiter(',');
  app->add_option("--format", c.format, "json, csv or pretty");
  app->add_option("--seed", c.seed, "seed for randomized checks");
  app->add_option("--threads", c.threads, "worker threads, 0 for all cores");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification tool for q-Whittaker functions and the q-Toda chain", "qwhit"};
  app.require_subcommand(1);
  RunConfig config;
  std::string window;
  std::string suite;

  auto* whittaker = app.add_subcommand("whittaker", "Whittaker function values");
  whittaker->require_subcommand(1);
  auto* w_eval = whittaker->add_subcommand("eval", "print psi and psi_tilde at a point or over the window");
  add_common(w_eval, config, window);

  auto* chr = app.add_subcommand("char", "gl_n characters");
  chr->require_subcommand(1);
  auto* c_eval = chr->add_subcommand("eval", "print the character at a point or over the window");
  add_common(c_eval, config, window);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, config, window);
  verify->add_option("suite,--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

  auto* mac = app.add_subcommand("macdonald", "Macdonald polynomials");
  mac->require_subcommand(1);
  auto* m_poly = mac->add_subcommand("poly", "print P_lambda in n = len(lambda) variables");
  auto* m_eigen = mac->add_subcommand("eigen", "check the operator eigenvalues on P_lambda");
  auto* m_degen = mac->add_subcommand("degenerate", "numeric Toda degeneration of the operators");
  for (auto* s : {m_poly, m_eigen, m_degen}) add_common(s, config, window);

  std::vector<std::string> args = normalize_args(argc, argv);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::stringstream so, se;
    int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return code == 0 ? 0 : 2;
  }

  try {
    bool rank_given = false;
    for (auto* s : {w_eval, c_eval, verify, m_poly, m_eigen, m_degen}) {
      if (s->parsed()) rank_given = s->count("--rank") > 0;
    }
    if (!window.empty()) parse_window(window, config);
    if (m_poly->parsed() || m_eigen->parsed()) {
      if (!config.point.empty() && !rank_given) config.rank = static_cast<int>(config.point.size());
    }
    validate(config, rank_given);
    if (w_eval->parsed()) return cmd_whittaker_eval(config, out);
    if (c_eval->parsed()) return cmd_char_eval(config, out);
    if (m_poly->parsed()) return cmd_macdonald_poly(config, out);
    if (m_eigen->parsed()) return cmd_macdonald_eigen(config, out);
    if (m_degen->parsed()) return cmd_macdonald_degenerate(config, out);
    return emit_reports(run_suite(suite, config), config.format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qwhit
