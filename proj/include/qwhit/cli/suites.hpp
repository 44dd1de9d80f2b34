#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qwhit {

struct RunConfig {
  int rank = 2;
  int window_lo = -1;
  int window_hi = 3;
  std::vector<int> point;  // empty: use the window
  int max_part = 3;
  int degree_bound = 4;
  double q_value = 0.5;
  std::vector<int> k_list{4, 8, 12};
  std::vector<double> sample;  // empty: x_i = 1/(2^i - 1)
  std::string format = "json";
  unsigned seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerificationReport {
  std::string check;
  nlohmann::json params;
  std::string status;         // pass | fail | error
  nlohmann::json residual;    // set iff status == fail
  std::string detail;
  double wall_time_ms = 0;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") over the configured grid. Reports come back
/// in a fixed order independent of scheduling.
std::vector<VerificationReport> run_suite(const std::string& suite, const RunConfig& config);

/// All points of [lo, hi]^n in lexicographic order.
std::vector<std::vector<int>> window_points(int n, int lo, int hi);

std::vector<double> default_sample(int n);

}  // namespace qwhit
