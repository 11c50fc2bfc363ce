#include "nestsub/poly.hpp"

#include <algorithm>
#include <sstream>

#include "nestsub/error.hpp"

namespace nestsub {

Poly::Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { normalize(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int power) {
  if (power < 0) throw Error(ErrorCode::IndexOutOfRange, "negative monomial power");
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  return Poly(std::move(v));
}

Poly Poly::with_nominal(std::vector<Rat> ascending, int nominal) {
  Poly p(std::move(ascending));
  p.nominal_ = nominal;
  return p;
}

Poly Poly::with_nominal_degree(int nominal) const {
  Poly p = *this;
  p.nominal_ = nominal;
  return p;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::lc() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Rat> Poly::descending(int nominal) const {
  if (nominal < degree()) {
    throw Error(ErrorCode::IndexOutOfRange, "nominal degree below true degree");
  }
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(nominal) + 1);
  for (int i = nominal; i >= 0; --i) out.push_back(coeff(i));
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  nominal_ = -1;
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  nominal_ = -1;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  nominal_ = -1;
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    coeffs_.clear();
  } else {
    for (auto& c : coeffs_) c *= s;
  }
  return *this;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rat> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Poly(std::move(out));
}

Rat eval_at(const Poly& p, const Rat& x0) {
  Rat acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x0 + p.coeff(i);
  return acc;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

PseudoDivision pseudo_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroDivisor, "pseudo_divide by zero polynomial");
  const int dg = g.degree();
  const int delta = std::max(f.degree() - dg + 1, 0);
  const Rat lg = g.lc();

  // Classic prem loop: r <- lc(g) r - lead(r) x^k g, quotient tracks the same scaling.
  std::vector<Rat> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> q(static_cast<std::size_t>(std::max(f.degree() - dg + 1, 0)));
  int steps = 0;
  for (int dr = f.degree(); dr >= dg; --dr) {
    const Rat lead = r[static_cast<std::size_t>(dr)];
    for (auto& c : q) c *= lg;
    for (auto& c : r) c *= lg;
    const int shift = dr - dg;
    q[static_cast<std::size_t>(shift)] += lead;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(i + shift)] -= lead * g.coeff(i);
    ++steps;
  }
  // Each loop iteration contributed one factor lc(g); pad to the full exponent.
  Rat pad = pow(lg, delta - steps);
  Poly quotient(std::move(q));
  Poly remainder(std::move(r));
  quotient *= pad;
  remainder *= pad;
  return {std::move(quotient), std::move(remainder), pow(lg, delta)};
}

Division divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroDivisor, "divide by zero polynomial");
  const int dg = g.degree();
  const Rat inv_lc = Rat(1) / g.lc();
  std::vector<Rat> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> q(static_cast<std::size_t>(std::max(f.degree() - dg + 1, 0)));
  for (int dr = f.degree(); dr >= dg; --dr) {
    const Rat t = r[static_cast<std::size_t>(dr)] * inv_lc;
    if (t == 0) continue;
    const int shift = dr - dg;
    q[static_cast<std::size_t>(shift)] = t;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(i + shift)] -= t * g.coeff(i);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw Error(ErrorCode::InvariantBreach, "inexact polynomial division");
  return q;
}

ContentPrimitive content_primitive(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of zero polynomial");
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.lc() < 0) content = -content;
  Poly primitive = p * (Rat(1) / content);
  return {content, std::move(primitive)};
}

Poly gcd(const Poly& f, const Poly& g) {
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return content_primitive(a).primitive;
}

std::optional<Rat> proportionality_factor(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  Rat factor = a.lc() / b.lc();
  if (a == b * factor) return factor;
  return std::nullopt;
}

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace nestsub
