#pragma once

#include <gmpxx.h>

#include <string>

namespace nestsub {

// Canonical arbitrary-precision rational (gcd(num, den) = 1, den > 0).
using Rat = mpq_class;
using Int = mpz_class;

// Always "num/den", also for integers ("3/1"), so JSON consumers see one shape.
std::string to_fraction_string(const Rat& r);

// Compact human form: "3", "-3/2".
std::string to_display_string(const Rat& r);

// Accepts "n", "n/d" with optional sign; throws ParseError.
Rat parse_rat(const std::string& text);

// Bit length of the larger of |num| and den.
std::size_t bit_length(const Rat& r);

Rat pow(const Rat& base, long exponent);

}  // namespace nestsub
