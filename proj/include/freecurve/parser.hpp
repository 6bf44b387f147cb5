#ifndef FREECURVE_PARSER_HPP
#define FREECURVE_PARSER_HPP

#include <array>
#include <string>

#include "freecurve/poly.hpp"

namespace freecurve {

/// Parses "x^2*y - 1/3*z^3", "x*y*z*(x-y)*(x-z)*(y-z)",
/// "(1/2+3/4*i)*x", ... into the canonical sparse form. Coefficients are
/// rationals "a/b", the imaginary unit "i" (Q(i) only), or integers
/// (least residues over GF(p)). Errors carry the offending position.
Poly parse_poly(const std::string& text, const FieldId& field);

/// Parses a constant expression into a field element.
Scalar parse_scalar(const std::string& text, const FieldId& field);

/// Parses "(a, b, c)" with constant-expression coordinates.
std::array<Scalar, 3> parse_point(const std::string& text, const FieldId& field);

}  // namespace freecurve

#endif
