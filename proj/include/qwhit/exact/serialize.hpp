#pragma once

// JSON wire format.
//
//   polynomial in q:   [[exponent, "numerator", "denominator"], ...]
//   Laurent polynomial: [{"z": [e1, ..., en],
//                         "coeff": {"num": "1 - q^2", "den": "1 - q"}}, ...]
//
// Coefficient strings are integer-coefficient polynomials in ascending
// powers, rendered from the canonical form. Monomials appear in
// lexicographic order of their exponent vectors.

#include <json.hpp>

#include "qwhit/exact/laurent.hpp"
#include "qwhit/exact/poly_q.hpp"
#include "qwhit/exact/ratfun_q.hpp"
#include "qwhit/exact/ratfun_qt.hpp"

namespace qwhit {

using json = nlohmann::json;

json polynomial_to_json(const PolynomialQ& p);
PolynomialQ polynomial_from_json(const json& j);

json coefficient_to_json(const RationalFunctionQ& c);
json coefficient_to_json(const RationalFunctionQT& c);
RationalFunctionQ coefficient_from_json(const json& j);

json laurent_to_json(const Laurent<RationalFunctionQ>& p);
json laurent_to_json(const Laurent<PolynomialQ>& p);
json laurent_to_json(const Laurent<Integer>& p);
json laurent_to_json(const Laurent<Rational>& p);
json laurent_to_json(const Laurent<RationalFunctionQT>& p);

/// Inverse of laurent_to_json for Q(q) coefficients; nvars is taken from
/// the first entry, or from nvars_hint when the list is empty.
Laurent<RationalFunctionQ> laurent_from_json(const json& j, std::size_t nvars_hint = 0);

}  // namespace qwhit
