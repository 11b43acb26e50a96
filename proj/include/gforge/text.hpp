#pragma once

#include <string_view>
#include <vector>

#include "gforge/poly.hpp"

namespace gforge {

// Polynomial text grammar: sums of products of rational literals ("5", "5/2"),
// the variables Y and T, the finite-field generator g, parentheses and
// non-negative integer powers, e.g. "Y^3 + (T - 1)*Y + (T - 1)".
// The printers in poly.hpp emit text that reads back to the same value.

FieldElem parse_element(std::string_view text, const Field& field);

/// Polynomial in `var` (Y or T); the other variable must not occur.
UniPoly parse_unipoly(std::string_view text, const Field& field, char var = 'Y');

/// Any element of k[T][Y], as coefficients in T indexed by Y-degree.
std::vector<UniPoly> parse_bivariate(std::string_view text, const Field& field);

/// Element of k[T][Y] that is monic in Y.
ParamPoly parse_parampoly(std::string_view text, const Field& field);

}  // namespace gforge
