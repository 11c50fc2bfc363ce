#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nestsub/rational.hpp"

namespace nestsub {

// Dense univariate polynomial over Q, coefficients in ascending powers.
//
// The stored coefficients are always normalized (no trailing zeros); the zero
// polynomial has degree -1. A polynomial may additionally carry a nominal
// degree larger than its true degree: determinant polynomials are defined
// coefficient-by-coefficient up to a fixed index and their coefficient vector
// is extracted at that length even when the top determinant vanishes.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int power);
  static Poly from_ints(std::initializer_list<long> ascending);
  // Builds from coefficients of x^0..x^nominal and keeps `nominal` as the nominal degree.
  static Poly with_nominal(std::vector<Rat> ascending, int nominal);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int nominal_degree() const { return nominal_ > degree() ? nominal_ : degree(); }
  Poly with_nominal_degree(int nominal) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Leading coefficient of the true degree; zero for the zero polynomial.
  Rat lc() const;
  // Coefficient of x^i, zero outside the stored range.
  Rat coeff(int i) const;
  std::span<const Rat> coeffs() const { return coeffs_; }
  // Coefficients x^nominal .. x^0 (length nominal+1), i.e. a Sylvester column.
  std::vector<Rat> descending(int nominal) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  // Coefficient-wise equality; nominal degree does not participate.
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rat> coeffs_;
  int nominal_ = -1;
};

Poly derivative(const Poly& p);
Rat eval_at(const Poly& p, const Rat& x0);
Poly pow(const Poly& p, unsigned exponent);

struct PseudoDivision {
  Poly quotient;
  Poly remainder;
  Rat multiplier;  // lc(g)^(deg f - deg g + 1)
};

// multiplier * f = quotient * g + remainder, deg remainder < deg g.
PseudoDivision pseudo_divide(const Poly& f, const Poly& g);

struct Division {
  Poly quotient;
  Poly remainder;
};

// Field division over Q.
Division divide(const Poly& f, const Poly& g);

// f / g, throwing InvariantBreach when g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);

struct ContentPrimitive {
  Rat content;
  Poly primitive;
};

// p = content * primitive; primitive has coprime integer coefficients and a
// positive leading coefficient, so the content carries the sign of lc(p).
ContentPrimitive content_primitive(const Poly& p);

// Primitive, positive-lc representative of gcd(f, g); zero when both are zero.
Poly gcd(const Poly& f, const Poly& g);

// If a = factor * b for a nonzero rational factor, returns that factor.
std::optional<Rat> proportionality_factor(const Poly& a, const Poly& b);

// Parseable text: "3/2*x^3 + x - 5". Zero renders as "0".
std::string render(const Poly& p);

}  // namespace nestsub
