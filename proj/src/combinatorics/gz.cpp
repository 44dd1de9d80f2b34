#include "qwhit/combinatorics/gz.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qwhit {

bool is_weakly_increasing(const Row& row) { return std::is_sorted(row.begin(), row.end()); }

GZPattern::GZPattern(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (!valid(rows_)) throw std::invalid_argument("not a Gelfand-Zetlin pattern");
}

long GZPattern::row_sum(std::size_t k) const {
  if (k == 0) return 0;
  long s = 0;
  for (int x : row(k)) s += x;
  return s;
}

bool GZPattern::valid(const std::vector<Row>& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != k + 1) return false;
  }
  if (!rows.empty() && !is_weakly_increasing(rows.back())) return false;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    const Row& lo = rows[k];
    const Row& up = rows[k + 1];
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] < up[i] || lo[i] > up[i + 1]) return false;
    }
  }
  return true;
}

GZPatternStream::GZPatternStream(Row top) : n_(top.size()) {
  if (n_ == 0 || !is_weakly_increasing(top)) {
    done_ = true;
    return;
  }
  rows_.resize(n_);
  for (std::size_t k = 0; k < n_; ++k) rows_[k].assign(k + 1, 0);
  rows_.back() = std::move(top);
  for (std::size_t k = n_ - 1; k-- > 0;) {
    for (std::size_t i = 0; i <= k; ++i) slots_.emplace_back(k, i);
  }
}

std::pair<int, int> GZPatternStream::bounds(std::size_t pos) const {
  auto [k, i] = slots_[pos];
  const Row& up = rows_[k + 1];
  return {up[i], up[i + 1]};
}

void GZPatternStream::fill_from(std::size_t pos) {
  for (; pos < slots_.size(); ++pos) {
    auto [k, i] = slots_[pos];
    rows_[k][i] = bounds(pos).first;
  }
}

std::optional<GZPattern> GZPatternStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_from(0);
    return GZPattern(rows_);
  }
  for (std::size_t pos = slots_.size(); pos-- > 0;) {
    auto [k, i] = slots_[pos];
    if (rows_[k][i] < bounds(pos).second) {
      ++rows_[k][i];
      fill_from(pos + 1);
      return GZPattern(rows_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<GZPattern> enumerate_gz(const Row& top) {
  std::vector<GZPattern> out;
  GZPatternStream s(top);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

InterlacingStream::InterlacingStream(Row upper) : upper_(std::move(upper)) {
  if (upper_.empty() || !is_weakly_increasing(upper_)) done_ = true;
}

std::optional<Row> InterlacingStream::next() {
  if (done_) return std::nullopt;
  std::size_t m = upper_.size() - 1;
  if (!started_) {
    started_ = true;
    current_.assign(upper_.begin(), upper_.end() - 1);
    return current_;
  }
  for (std::size_t i = m; i-- > 0;) {
    if (current_[i] < upper_[i + 1]) {
      ++current_[i];
      for (std::size_t j = i + 1; j < m; ++j) current_[j] = upper_[j];
      return current_;
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Row> enumerate_interlacing(const Row& upper) {
  std::vector<Row> out;
  InterlacingStream s(upper);
  while (auto r = s.next()) out.push_back(std::move(*r));
  return out;
}

Row to_descending(const Row& ascending) { return Row(ascending.rbegin(), ascending.rend()); }
Row to_ascending(const Row& descending) { return Row(descending.rbegin(), descending.rend()); }

nlohmann::json pattern_to_json(const GZPattern& p) { return p.rows(); }

}  // namespace qwhit
