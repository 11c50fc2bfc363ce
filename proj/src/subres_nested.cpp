#include "nestsub/subres_nested.hpp"

#include <string>

#include "nestsub/subres_classic.hpp"

namespace nestsub {

NestedSubresultants::NestedSubresultants(Poly f, Poly g, DegreeChain chain)
    : f_(std::move(f)), g_(std::move(g)), chain_(std::move(chain)) {
  if (f_.degree() != chain_.m() || g_.degree() != chain_.n()) {
    throw Error(ErrorCode::BadChain, "chain degrees do not match the inputs");
  }
  for (int k = 1; k < chain_.depth(); ++k) {
    try {
      stage_polys_.push_back(determinant_polynomial(build(k, chain_.j(k)), chain_.j(k)));
    } catch (const Error& e) {
      stage_error_ = e;
      break;
    }
  }
}

const Poly& NestedSubresultants::stage_poly(int k) const {
  if (k < 1 || k >= chain_.depth()) {
    throw Error(ErrorCode::IndexOutOfRange, "stage polynomial index k=" + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) > stage_polys_.size()) throw *stage_error_;
  return stage_polys_[static_cast<std::size_t>(k - 1)];
}

Mat NestedSubresultants::build(int k, int j) const {
  if (k == 1) return subres_matrix(f_, g_, j);
  const int jp = chain_.j(k - 1);
  const Poly& prev = stage_poly(k - 1);
  if (prev.degree() != jp) {
    throw Error(ErrorCode::VanishingLeading,
                "leading coefficient of the level-" + std::to_string(k - 1) + " nested subresultant vanishes");
  }
  Mat out = subres_matrix(prev, derivative(prev).with_nominal_degree(jp - 1), j);
  if (out.rows() != static_cast<std::size_t>(2 * jp - 1 - j) ||
      out.cols() != static_cast<std::size_t>(2 * jp - 1 - 2 * j)) {
    throw Error(ErrorCode::InvariantBreach, "nested matrix dimensions");
  }
  return out;
}

Mat NestedSubresultants::matrix(int k, int j) const {
  chain_.require_index(k, j, true);
  return build(k, j);
}

Poly NestedSubresultants::subresultant(int k, int j) const {
  return determinant_polynomial(matrix(k, j), j);
}

Mat nested_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  return NestedSubresultants(f, g, chain).matrix(k, j);
}

Poly nested_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  return NestedSubresultants(f, g, chain).subresultant(k, j);
}

namespace {

int sign_power(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// r = (-1)^((u-1) * b(b-1)/2).
int r_sign(long u_prev, long b) {
  const long tri = (b * (b - 1) / 2) % 2;
  return sign_power(((u_prev - 1) % 2) * tri);
}

int pow_sign(int s, long e) { return (s == -1 && e % 2 != 0) ? -1 : 1; }

}  // namespace

Thm1Constants thm1_constants(const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  Thm1Constants c;
  const long base = chain.m() + chain.n() - 2L * chain.j(1);
  if (k == 1) {
    c.u_prev = 0;
    c.u_kj = chain.m() + chain.n() - 2L * j;
    c.b_kj = 1;
    return c;
  }
  // Walk u_l = u_{l-1} b_l and R_l = R_{l-1}^{b_l} r_l up to level k-1.
  long u = base;
  int big_r = 1;
  for (int l = 2; l <= k - 1; ++l) {
    const long b_l = 2L * chain.j(l - 1) - 2L * chain.j(l) - 1;
    const int r_l = r_sign(u, b_l);
    big_r = pow_sign(big_r, b_l) * r_l;
    u *= b_l;
  }
  c.u_prev = u;
  c.b_kj = 2L * chain.j(k - 1) - 2L * j - 1;
  c.u_kj = u * c.b_kj;
  c.r_kj = r_sign(u, c.b_kj);
  c.R_prev = big_r;
  c.predicted_factor = pow_sign(big_r, c.b_kj) * c.r_kj;
  return c;
}

}  // namespace nestsub
