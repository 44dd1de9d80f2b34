#include "qwhit/exact/eval.hpp"

#include <stdexcept>

namespace qwhit {

Laurent<Integer> to_integer_laurent(const Laurent<Rational>& f) {
  return f.map_coefficients([](const Rational& c) {
    if (c.get_den() != 1) throw std::domain_error("non-integer coefficient " + c.get_str());
    return Integer(c.get_num());
  });
}

}  // namespace qwhit
