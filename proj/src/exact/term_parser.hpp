#pragma once

// Rendering and parsing of sums of monomials such as "1 - 2*q^3*t + 1/2*t^2".

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwhit/exact/rational.hpp"

namespace qwhit::detail {

struct ParsedTerm {
  Rational coeff;
  std::vector<int> powers;  // one entry per variable name
};

inline std::string render_terms(
    const std::vector<std::pair<Rational, std::vector<std::pair<char, int>>>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, vars] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1 && !vars.empty();
    if (!unit) out += mag.get_str();
    bool need_star = !unit;
    for (const auto& [name, power] : vars) {
      if (need_star) out += "*";
      out += name;
      if (power != 1) out += "^" + std::to_string(power);
      need_star = true;
    }
  }
  return out;
}

inline std::vector<ParsedTerm> parse_terms(std::string_view text, std::string_view var_names) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial string");
  std::vector<ParsedTerm> out;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail();
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!out.empty()) {
      fail();
    }
    ParsedTerm term{Rational(sign), std::vector<int>(var_names.size(), 0)};
    bool have_factor = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (have_factor) {
        if (s[i] != '*') fail();
        ++i;
      }
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        Integer num(read_int());
        Integer den(1);
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = Integer(read_int());
        }
        if (den == 0) fail();
        term.coeff *= make_rational(num, den);
      } else if (i < s.size()) {
        auto pos = var_names.find(s[i]);
        if (pos == std::string_view::npos) fail();
        ++i;
        int power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          power = std::stoi(read_int());
        }
        term.powers[pos] += power;
      } else {
        fail();
      }
      have_factor = true;
    }
    if (!have_factor) fail();
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace qwhit::detail
