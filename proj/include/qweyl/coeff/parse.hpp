#pragma once

#include <string_view>

#include "qweyl/coeff/scalar.hpp"

namespace qweyl::coeff {

// Reads the canonical scalar text back: signed sums of products of
// rationals, `i`, `q`, `q^n`, `q^(k/2)` and parenthesized sub-sums.
// Juxtaposition and `*` both multiply. Throws SyntaxError with the byte
// offset and the expected tokens.
Scalar parse_scalar(std::string_view text);

}  // namespace qweyl::coeff
