#include "nestsub/rational.hpp"

#include <cctype>

#include "nestsub/error.hpp"

namespace nestsub {

std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end = digits(i);
  if (end == i) throw ParseError(i, "expected digits");
  Int num(text.substr(0, end));
  if (text[0] == '+') num = Int(text.substr(1, end - 1));
  if (end == text.size()) return Rat(num);
  if (text[end] != '/') throw ParseError(end, "expected '/'");
  std::size_t den_end = digits(end + 1);
  if (den_end == end + 1) throw ParseError(end + 1, "expected denominator digits");
  if (den_end != text.size()) throw ParseError(den_end, "trailing characters");
  Int den(text.substr(end + 1));
  if (den == 0) throw ParseError(end + 1, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::size_t bit_length(const Rat& r) {
  std::size_t a = mpz_sizeinbase(r.get_num_mpz_t(), 2);
  std::size_t b = mpz_sizeinbase(r.get_den_mpz_t(), 2);
  return a > b ? a : b;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroDivisor, "negative power of zero");
    return pow(Rat(1) / base, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace nestsub
