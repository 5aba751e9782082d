#pragma once

#include "curvemod/poly.hpp"

#include <string>

namespace curvemod {

// Grammar: sums of products of integers, p/q, sqrt(d), x, y, z, powers and
// parenthesised subexpressions. Division only by nonzero constants.
Poly<Num> parse_poly(const std::string& text);

// Rational homogeneous form. An inhomogeneous input without z is homogenized
// with z; anything else that is not homogeneous is rejected.
Form parse_form(const std::string& text);

// Canonical printing: terms in descending lex order, "c*x^i*y^j*z^k".
std::string to_string(const Poly<Num>& p);
std::string to_string(const Form& p);

} // namespace curvemod
