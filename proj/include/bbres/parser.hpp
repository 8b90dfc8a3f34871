#pragma once

#include "bbres/multipoly.hpp"

#include <string_view>
#include <vector>

namespace bbres {

// Parse an ASCII polynomial expression over the declared variables.
//
// Grammar: +, -, *, parentheses, ^ with non-negative integer exponents,
// integer literals, and juxtaposition as multiplication ("2x^2", "yz").
// '/' is accepted when the divisor is a nonzero constant ("2/3", "y^2/2").
// Variable references use longest-match against the declared names, so "yz"
// splits into y*z unless a variable named "yz" is declared.
//
// Throws ParseError (with byte offset) on malformed text or an undeclared
// variable name.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

} // namespace bbres
