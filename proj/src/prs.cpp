#include "nestsub/prs.hpp"

#include "nestsub/error.hpp"

namespace nestsub {

std::string_view to_string(DivisionRule rule) {
  switch (rule) {
    case DivisionRule::Euclidean: return "euclidean";
    case DivisionRule::Primitive: return "primitive";
    case DivisionRule::Subresultant: return "subresultant";
  }
  return "unknown";
}

DivisionRule parse_division_rule(std::string_view name) {
  if (name == "euclidean") return DivisionRule::Euclidean;
  if (name == "primitive") return DivisionRule::Primitive;
  if (name == "subresultant") return DivisionRule::Subresultant;
  throw Error(ErrorCode::ParseError, "unknown division rule '" + std::string(name) + "'");
}

std::vector<int> PrsStage::degrees() const {
  std::vector<int> out;
  for (const auto& p : polys) out.push_back(p.degree());
  return out;
}

std::vector<Rat> PrsStage::leading() const {
  std::vector<Rat> out;
  for (const auto& p : polys) out.push_back(p.lc());
  return out;
}

std::vector<int> PrsStage::gaps() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < polys.size(); ++i) {
    out.push_back(polys[i].degree() - polys[i + 1].degree());
  }
  return out;
}

bool PrsStage::normal() const {
  auto d = gaps();
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] != 1) return false;
  return true;
}

PrsStage prs(const Poly& f, const Poly& g, DivisionRule rule) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "prs of zero polynomial");
  if (f.degree() < g.degree()) {
    throw Error(ErrorCode::DegenerateDegrees, "prs requires deg f >= deg g");
  }
  PrsStage stage;
  stage.rule = rule;
  stage.equal_degree_start = f.degree() == g.degree();
  stage.polys = {f, g};

  // Subresultant (Collins/Brown) state: psi_i and the previous gap.
  Rat psi = -1;
  while (true) {
    const Poly& a = stage.polys[stage.polys.size() - 2];
    const Poly& b = stage.polys.back();
    if (b.is_constant()) break;
    const std::size_t i = stage.polys.size() + 1;  // index of the element being produced
    const int d = a.degree() - b.degree();

    Rat alpha;
    Rat beta;
    Poly quotient;
    Poly remainder;
    if (rule == DivisionRule::Euclidean) {
      auto [q, r] = divide(a, b);
      alpha = 1;
      beta = 1;
      quotient = std::move(q);
      remainder = std::move(r);
    } else {
      auto pd = pseudo_divide(a, b);
      alpha = pd.multiplier;
      quotient = std::move(pd.quotient);
      remainder = std::move(pd.remainder);
      if (rule == DivisionRule::Primitive) {
        beta = remainder.is_zero() ? Rat(1) : content_primitive(remainder).content;
      } else if (i == 3) {
        beta = (d % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^(d_1 + 1)
      } else {
        const int d_prev = stage.polys[stage.polys.size() - 3].degree() - a.degree();
        psi = pow(Rat(-a.lc()), d_prev) * pow(psi, 1 - d_prev);
        beta = -a.lc() * pow(psi, d);
      }
    }
    if (remainder.is_zero()) break;
    Poly next = remainder * (Rat(1) / beta);
    stage.alphas.push_back(alpha);
    stage.betas.push_back(beta);
    stage.quotients.push_back(std::move(quotient));
    stage.polys.push_back(std::move(next));
  }
  return stage;
}

RecursivePrs recursive_prs(const Poly& f, const Poly& g, DivisionRule rule) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "recursive_prs of zero polynomial");
  RecursivePrs out;
  out.chain.push_back(f.degree());
  Poly p1 = f;
  Poly p2 = g;
  while (true) {
    PrsStage stage = prs(p1, p2, rule);
    const Poly& last = stage.last();
    out.chain.push_back(last.degree());
    out.gammas.push_back(last.lc() / content_primitive(last).primitive.lc());
    bool done = last.is_constant();
    p1 = last;
    p2 = derivative(last);
    out.stages.push_back(std::move(stage));
    if (done) break;
  }
  out.complete = true;
  return out;
}

std::vector<int> degree_chain(const RecursivePrs& r) {
  if (!r.complete || r.stages.empty()) throw Error(ErrorCode::Incomplete, "recursive PRS incomplete");
  return r.chain;
}

}  // namespace nestsub
