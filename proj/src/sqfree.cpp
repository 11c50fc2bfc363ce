#include "nestsub/sqfree.hpp"

#include "nestsub/error.hpp"
#include "nestsub/prs.hpp"

namespace nestsub {

SquareFreeDecomposition sqfree(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sqfree of zero polynomial");
  if (p.degree() < 1) throw Error(ErrorCode::DegenerateDegrees, "sqfree needs deg p >= 1");

  const RecursivePrs rp = recursive_prs(p, derivative(p));
  // G_0 = p, G_k = primitive part of the last element of stage k.
  std::vector<Poly> g{content_primitive(p).primitive};
  for (const auto& stage : rp.stages) {
    g.push_back(stage.last().is_constant() ? Poly::constant(1) : content_primitive(stage.last()).primitive);
  }
  // W_k = G_{k-1} / G_k is the product of the factors with multiplicity >= k.
  std::vector<Poly> w;
  for (std::size_t k = 1; k < g.size(); ++k) w.push_back(exact_quotient(g[k - 1], g[k]));
  w.push_back(Poly::constant(1));

  SquareFreeDecomposition out;
  Poly product = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    Poly q = exact_quotient(w[k], w[k + 1]);
    if (q.degree() < 1) continue;
    q = content_primitive(q).primitive;
    const int mult = static_cast<int>(k) + 1;
    product *= pow(q, static_cast<unsigned>(mult));
    out.factors.push_back({std::move(q), mult});
  }
  out.constant = p.lc() / product.lc();
  if (p != product * out.constant) throw Error(ErrorCode::InvariantBreach, "square-free reconstruction");
  return out;
}

}  // namespace nestsub
