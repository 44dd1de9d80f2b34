#include "qwhit/toda/lattice_function.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qwhit {

LatticeFunction LatticeFunction::from_table(std::size_t rank, std::size_t value_nvars, Table table) {
  for (auto it = table.begin(); it != table.end();) {
    if (it->first.size() != rank) throw std::invalid_argument("table point has wrong rank");
    if (it->second.nvars() != value_nvars) throw std::invalid_argument("variable count mismatch");
    it = it->second.is_zero() ? table.erase(it) : std::next(it);
  }
  LatticeFunction f(rank, value_nvars);
  f.table_ = std::make_shared<const Table>(std::move(table));
  return f;
}

LatticeFunction LatticeFunction::from_rule(std::size_t rank, std::size_t value_nvars, Rule rule) {
  LatticeFunction f(rank, value_nvars);
  f.rule_ = std::move(rule);
  return f;
}

namespace {

struct Memo {
  std::shared_mutex mutex;
  std::map<LatticePoint, WhittakerValue> values;
};

}  // namespace

LatticeFunction LatticeFunction::cached(std::size_t rank, std::size_t value_nvars, Rule rule) {
  auto memo = std::make_shared<Memo>();
  return from_rule(rank, value_nvars, [memo, rule = std::move(rule)](const LatticePoint& p) {
    {
      std::shared_lock lock(memo->mutex);
      auto it = memo->values.find(p);
      if (it != memo->values.end()) return it->second;
    }
    WhittakerValue v = rule(p);
    std::unique_lock lock(memo->mutex);
    return memo->values.emplace(p, std::move(v)).first->second;
  });
}

LatticeFunction::Value LatticeFunction::operator()(const LatticePoint& p) const {
  if (p.size() != rank_) throw std::invalid_argument("lattice point has wrong rank");
  if (table_) {
    auto it = table_->find(p);
    return it == table_->end() ? Value(value_nvars_) : it->second;
  }
  return rule_(p);
}

std::optional<std::vector<LatticePoint>> LatticeFunction::support() const {
  if (!table_) return std::nullopt;
  std::vector<LatticePoint> out;
  for (const auto& [p, v] : *table_) out.push_back(p);
  return out;
}

LatticeFunction psi_function(std::size_t n) {
  return LatticeFunction::cached(n, n, [](const LatticePoint& p) { return psi_direct(p); });
}

LatticeFunction psi_tilde_function(std::size_t n) {
  return LatticeFunction::cached(n, n, [](const LatticePoint& p) {
    return psi_tilde(p).map_coefficients([](const PolynomialQ& c) { return RationalFunctionQ(c); });
  });
}

}  // namespace qwhit
