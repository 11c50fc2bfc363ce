#include "nestsub/parse.hpp"

#include <cctype>
#include <string>

#include "nestsub/error.hpp"

namespace nestsub {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::vector<Rat> acc;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(acc, negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, std::string("unexpected '") + op + "'");
      ++pos_;
      term(acc, op == '-');
    }
    return Poly(std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int uint_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected unsigned integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  void term(std::vector<Rat>& acc, bool negative) {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected term");
    Rat coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = uint_literal();
      Int den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t where = pos_;
        den = uint_literal();
        if (den == 0) throw ParseError(where, "zero denominator");
      }
      coeff = Rat(num, den);
      coeff.canonicalize();
      has_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError(pos_, "expected 'x' after '*'");
      }
    }
    skip_ws();
    long power = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t where = pos_;
        Int p = uint_literal();
        if (p > 4096) throw ParseError(where, "exponent too large");
        power = p.get_si();
      }
    } else if (!has_coeff) {
      throw ParseError(pos_, "expected coefficient or 'x'");
    }
    if (acc.size() <= static_cast<std::size_t>(power)) acc.resize(static_cast<std::size_t>(power) + 1);
    acc[static_cast<std::size_t>(power)] += negative ? Rat(-coeff) : coeff;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace nestsub
