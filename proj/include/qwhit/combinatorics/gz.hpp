#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

namespace qwhit {

using Row = std::vector<int>;

bool is_weakly_increasing(const Row& row);

/// Gelfand-Zetlin pattern: rows[k-1] has length k, k = 1..n, and
/// rows[k][i] <= rows[k-1][i] <= rows[k][i+1]. The top row is rows.back().
class GZPattern {
 public:
  explicit GZPattern(std::vector<Row> rows);

  std::size_t size() const { return rows_.size(); }
  const Row& row(std::size_t k) const { return rows_.at(k - 1); }  // 1-based
  const Row& top() const { return rows_.back(); }
  const std::vector<Row>& rows() const { return rows_; }

  /// Sum of row k (1-based); 0 for k = 0.
  long row_sum(std::size_t k) const;

  static bool valid(const std::vector<Row>& rows);

  friend bool operator==(const GZPattern&, const GZPattern&) = default;

 private:
  std::vector<Row> rows_;
};

/// Lazy enumeration of all patterns with a given top row. Entries are
/// chosen row by row from the top down, left to right inside a row, and
/// the output is lexicographic in that order. A top row that is not
/// weakly increasing produces nothing.
class GZPatternStream {
 public:
  explicit GZPatternStream(Row top);
  std::optional<GZPattern> next();

 private:
  void fill_from(std::size_t pos);
  std::pair<int, int> bounds(std::size_t pos) const;

  std::size_t n_;
  std::vector<Row> rows_;
  // Flat position -> (row index 0-based, entry index).
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<GZPattern> enumerate_gz(const Row& top);

/// Rows of length size-1 interlacing below `upper`, lexicographic order.
class InterlacingStream {
 public:
  explicit InterlacingStream(Row upper);
  std::optional<Row> next();

 private:
  Row upper_;
  Row current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Row> enumerate_interlacing(const Row& upper);

/// Ascending tuple <-> descending partition.
Row to_descending(const Row& ascending);
Row to_ascending(const Row& descending);

nlohmann::json pattern_to_json(const GZPattern& p);

}  // namespace qwhit
