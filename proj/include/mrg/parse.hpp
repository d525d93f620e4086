#pragma once

#include <string_view>

#include "mrg/ratfunc.hpp"

namespace mrg {

// Parses a rational-function expression in z:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'z' | '(' expr ')'
//
// `^` binds tighter than unary minus, so "-z^2" is -(z^2). Rationals are
// written as quotients, e.g. "3/2". Whitespace is ignored.
//
// Throws ParseError (with the offending position) on syntax errors and
// DomainError on division by the zero function.
RatFunc parse_expr(std::string_view text);

// parse_expr, then requires the result to be constant.
Rational parse_constant(std::string_view text);

}  // namespace mrg
