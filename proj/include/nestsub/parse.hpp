#pragma once

#include <string_view>

#include "nestsub/poly.hpp"

namespace nestsub {

// Grammar (whitespace ignored, optional leading sign):
//   poly  := term (('+' | '-') term)*
//   term  := coeff ['*'] ['x' ['^' uint]] | 'x' ['^' uint]
//   coeff := int | int '/' uint
// Repeated powers accumulate. Throws ParseError with the byte offset.
Poly parse_poly(std::string_view text);

}  // namespace nestsub
