#include "qwhit/exact/serialize.hpp"

#include <stdexcept>
#include <string>

namespace qwhit {

json polynomial_to_json(const PolynomialQ& p) {
  json out = json::array();
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    out.push_back(json::array({static_cast<int>(i), c[i].get_num().get_str(), c[i].get_den().get_str()}));
  }
  return out;
}

PolynomialQ polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  PolynomialQ out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) throw std::invalid_argument("polynomial term must be [exp, num, den]");
    Integer num(term[1].get<std::string>());
    Integer den(term[2].get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
    out += PolynomialQ::monomial(make_rational(num, den), term[0].get<int>());
  }
  return out;
}

json coefficient_to_json(const RationalFunctionQ& c) {
  RationalFunctionQ r = c.canonical();
  return {{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

json coefficient_to_json(const RationalFunctionQT& c) {
  return {{"num", c.numerator().str()}, {"den", c.denominator().str()}};
}

RationalFunctionQ coefficient_from_json(const json& j) {
  return RationalFunctionQ(PolynomialQ::parse(j.at("num").get<std::string>()),
                           PolynomialQ::parse(j.at("den").get<std::string>()))
      .canonical();
}

namespace {

template <class C, class F>
json laurent_json(const Laurent<C>& p, F&& coeff) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"z", e}, {"coeff", coeff(c)}});
  return out;
}

}  // namespace

json laurent_to_json(const Laurent<RationalFunctionQ>& p) {
  return laurent_json(p, [](const RationalFunctionQ& c) { return coefficient_to_json(c); });
}

json laurent_to_json(const Laurent<PolynomialQ>& p) {
  return laurent_json(p, [](const PolynomialQ& c) { return coefficient_to_json(RationalFunctionQ(c)); });
}

json laurent_to_json(const Laurent<Integer>& p) {
  return laurent_json(p, [](const Integer& c) { return json{{"num", c.get_str()}, {"den", "1"}}; });
}

json laurent_to_json(const Laurent<Rational>& p) {
  return laurent_json(p, [](const Rational& c) {
    return json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
  });
}

json laurent_to_json(const Laurent<RationalFunctionQT>& p) {
  return laurent_json(p, [](const RationalFunctionQT& c) { return coefficient_to_json(c); });
}

Laurent<RationalFunctionQ> laurent_from_json(const json& j, std::size_t nvars_hint) {
  if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array");
  std::size_t n = j.empty() ? nvars_hint : j.front().at("z").size();
  Laurent<RationalFunctionQ> out(n);
  for (const auto& term : j) {
    out.add_term(term.at("z").get<Exponent>(), coefficient_from_json(term.at("coeff")));
  }
  return out;
}

}  // namespace qwhit
