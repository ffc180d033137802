#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "qweyl/freealg/presentation.hpp"

namespace qweyl::cli {

using freealg::Element;
using freealg::Presentation;

// Expression grammar:
//   expr   := term (('+'|'-') term)*       (a leading sign is allowed)
//   term   := factor+                      (juxtaposition; '*' also accepted)
//   factor := atom '~'* ('^' exponent)? '~'*
//   atom   := ident | rational | 'i' | 'q' | 'h' | '(' expr ')' | '[' expr ',' expr ']'
// Exponents are signed integers; q also takes q^(k/2). Negative powers
// need a declared inverse generator or a monomial scalar. '~' is the
// presentation's star, applied without normal ordering. No rewriting is
// done: the result is an element of the free algebra.
// Throws SyntaxError("offset N: expected ...") on malformed input.
Element parse_expression(std::string_view text, const Presentation& pres);

// "lhs = rhs"; a bare expression is read as "expr = 0".
std::pair<Element, Element> parse_relation(std::string_view text, const Presentation& pres);

// Canonical text, the inverse of parse_expression.
std::string print_expression(const Element& e, const Presentation& pres);

}  // namespace qweyl::cli
