#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qwhit/whittaker/whittaker.hpp"

namespace qwhit {

/// A function from Z^rank to Laurent polynomials in value_nvars variables.
/// Either a finite table (absent points read as zero) or an arbitrary rule.
class LatticeFunction {
 public:
  using Value = WhittakerValue;
  using Rule = std::function<Value(const LatticePoint&)>;
  using Table = std::map<LatticePoint, Value>;

  static LatticeFunction from_table(std::size_t rank, std::size_t value_nvars, Table table);
  static LatticeFunction from_rule(std::size_t rank, std::size_t value_nvars, Rule rule);
  /// Rule form that remembers every value it has produced.
  static LatticeFunction cached(std::size_t rank, std::size_t value_nvars, Rule rule);

  std::size_t rank() const { return rank_; }
  std::size_t value_nvars() const { return value_nvars_; }
  Value operator()(const LatticePoint& p) const;

  /// Points with nonzero value, for table functions only.
  std::optional<std::vector<LatticePoint>> support() const;

 private:
  LatticeFunction(std::size_t rank, std::size_t value_nvars) : rank_(rank), value_nvars_(value_nvars) {}
  std::size_t rank_;
  std::size_t value_nvars_;
  std::shared_ptr<const Table> table_;
  Rule rule_;
};

/// p -> psi_direct(p), cached.
LatticeFunction psi_function(std::size_t n);
/// p -> psi_tilde(p) with coefficients promoted to Q(q), cached.
LatticeFunction psi_tilde_function(std::size_t n);

}  // namespace qwhit
