#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "qwhit/cli/cli.hpp"
#include "qwhit/cli/suites.hpp"
#include "qwhit/exact/serialize.hpp"

using namespace qwhit;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "qwhit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(CliWhittaker, EvalAtPoint) {
  json j = run_json({"whittaker", "eval", "-n", "2", "-p", "0,1"});
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["p"], json::array({0, 1}));
  auto psi = laurent_from_json(j["psi"]);
  ASSERT_EQ(psi.size(), 2u);
  for (const auto& [e, c] : psi.terms()) EXPECT_EQ(c.str(), "(1)/(1 - q)");
  EXPECT_EQ(j["psi_tilde"].size(), 2u);
}

TEST(CliWhittaker, VanishingAndBaseCase) {
  json zero = run_json({"whittaker", "eval", "-n", "2", "-p", "1,0"});
  EXPECT_TRUE(zero["psi"].empty());
  json base = run_json({"whittaker", "eval", "-n", "1", "-p", "3"});
  ASSERT_EQ(base["psi"].size(), 1u);
  EXPECT_EQ(base["psi"][0]["z"], json::array({3}));
}

TEST(CliWhittaker, NegativeEntriesAndWindow) {
  json j = run_json({"whittaker", "eval", "-p", "-1,0"});
  EXPECT_EQ(j["p"], json::array({-1, 0}));
  json w = run_json({"whittaker", "eval", "-n", "2", "--window", "-1..0"});
  EXPECT_EQ(w.size(), 4u);
}

TEST(CliWhittaker, CsvAndPretty) {
  CliRun csv = run({"whittaker", "eval", "-n", "2", "-p", "0,1", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("p,psi,psi_tilde\n", 0), 0u);
  CliRun pretty = run({"whittaker", "eval", "-n", "2", "-p", "0,1", "--format", "pretty"});
  EXPECT_NE(pretty.out.find("psi_tilde = z2 + z1"), std::string::npos);
}

TEST(CliChar, Examples) {
  json a = run_json({"char", "eval", "-n", "3", "-p", "0,1,2"});
  EXPECT_EQ(a["character"].size(), 7u);
  json b = run_json({"char", "eval", "-n", "2", "-p", "0,0"});
  ASSERT_EQ(b["character"].size(), 1u);
  EXPECT_EQ(b["character"][0]["coeff"]["num"], "1");
  json c = run_json({"char", "eval", "-n", "2", "-p", "1,0"});
  EXPECT_TRUE(c["character"].empty());
}

TEST(CliVerify, SuitesPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "eigen", "-n", "3", "--window", "-1..3"},
           {"verify", "pieri", "-n", "2", "--max-part", "3"},
           {"verify", "degenerate", "-n", "2", "-q", "0.5", "-k", "4,8,12"},
           {"verify", "--suite", "recursion", "-n", "2"},
           {"verify", "all", "-n", "2", "--window", "0..2", "--degree-bound", "2"}}) {
    CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["error"], 0);
    EXPECT_GT(j["summary"]["total"], 0);
  }
}

TEST(CliVerify, ReportSchema) {
  json j = run_json({"verify", "q0", "-n", "2", "--window", "0..1"});
  for (const auto& r : j["reports"]) {
    EXPECT_EQ(r["status"], "pass");
    EXPECT_FALSE(r.contains("residual"));
    EXPECT_TRUE(r.contains("check"));
    EXPECT_TRUE(r.contains("params"));
    EXPECT_TRUE(r.contains("wall_time_ms"));
  }
}

TEST(CliVerify, DeterministicAcrossThreadCounts) {
  auto strip = [](json j) {
    for (auto& r : j["reports"]) r.erase("wall_time_ms");
    return j;
  };
  json one = strip(run_json({"verify", "eigen", "-n", "2", "--threads", "1"}));
  json four = strip(run_json({"verify", "eigen", "-n", "2", "--threads", "4"}));
  EXPECT_EQ(one, four);
  json a = strip(run_json({"verify", "adjoint", "-n", "2", "--seed", "7"}));
  json b = strip(run_json({"verify", "adjoint", "-n", "2", "--seed", "7"}));
  EXPECT_EQ(a, b);
}

TEST(CliVerify, DegenerateFailureExitsOne) {
  CliRun r = run({"verify", "degenerate", "-n", "2", "-k", "12,8,4"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliUsage, ErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "eigen", "-n", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "eigen", "--window", "3..1"}).code, 2);
  EXPECT_EQ(run({"verify", "eigen", "--window", "x"}).code, 2);
  EXPECT_EQ(run({"whittaker", "eval", "-n", "3", "-p", "0,1"}).code, 2);
  EXPECT_EQ(run({"whittaker", "eval", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"macdonald", "poly"}).code, 2);
}

TEST(CliUsage, RankCapFromEnvironment) {
  setenv("QWHIT_MAX_RANK", "2", 1);
  EXPECT_EQ(run({"whittaker", "eval", "-n", "3", "-p", "0,0,0"}).code, 2);
  setenv("QWHIT_MAX_RANK", "5", 1);
  EXPECT_EQ(run({"whittaker", "eval", "-n", "5", "-p", "0,0,0,0,1"}).code, 0);
  unsetenv("QWHIT_MAX_RANK");
}

TEST(CliMacdonald, PolyEigenDegenerate) {
  json p = run_json({"macdonald", "poly", "-p", "0,2"});
  EXPECT_EQ(p["partition"], json::array({2}));
  EXPECT_EQ(p["poly"].size(), 3u);
  json e = run_json({"macdonald", "eigen", "-p", "0,1"});
  ASSERT_EQ(e["eigen"].size(), 2u);
  EXPECT_EQ(e["eigen"][0]["measured"]["num"], "1 + q*t");
  json d = run_json({"macdonald", "degenerate", "-n", "2"});
  EXPECT_EQ(d["reports"].size(), 2u);
}

TEST(Suites, WindowPointsLexicographic) {
  auto pts = window_points(2, 0, 1);
  EXPECT_EQ(pts, (std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(default_sample(3), (std::vector<double>{1.0, 1.0 / 3.0, 1.0 / 7.0}));
}
