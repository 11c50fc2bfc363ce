#include "nestsub/report.hpp"

#include "nestsub/error.hpp"

namespace nestsub {

using nlohmann::json;

json to_json(const Rat& r) { return to_fraction_string(r); }

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (int i = 0; i <= p.nominal_degree(); ++i) coeffs.push_back(to_json(p.coeff(i)));
  json out{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
  if (p.nominal_degree() != p.degree()) out["nominal_degree"] = p.nominal_degree();
  return out;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& v : m.row(r)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

template <typename Range>
json rat_array(const Range& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json poly_array(const std::vector<Poly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return out;
}

}  // namespace

json to_json(const PrsStage& s) {
  return {{"rule", std::string(to_string(s.rule))},
          {"length", s.length()},
          {"polys", poly_array(s.polys)},
          {"degrees", s.degrees()},
          {"alphas", rat_array(s.alphas)},
          {"betas", rat_array(s.betas)},
          {"quotients", poly_array(s.quotients)},
          {"complete", s.complete()},
          {"normal", s.normal()},
          {"equal_degree_start", s.equal_degree_start}};
}

json to_json(const RecursivePrs& r) {
  json stages = json::array();
  for (const auto& s : r.stages) stages.push_back(to_json(s));
  return {{"depth", r.depth()},
          {"chain", r.chain},
          {"gammas", rat_array(r.gammas)},
          {"complete", r.complete},
          {"stages", std::move(stages)}};
}

json to_json(const VerifyReport& r, bool with_polys) {
  json out{{"theorem", r.theorem},
           {"k", r.k},
           {"j", r.j},
           {"factor", to_json(r.predicted_factor)},
           {"status", std::string(to_string(r.status))},
           {"reason", r.reason},
           {"f", r.f},
           {"g", r.g}};
  if (r.seed) out["seed"] = *r.seed;
  if (r.status == Status::Fail) out["witness"] = to_json(r.witness);
  if (with_polys && r.status != Status::Skipped) {
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
  }
  if (r.theorem == kProportionality) {
    json mults = json::array();
    for (const auto& m : r.multiples) {
      mults.push_back({{"k", m.k}, {"j", m.j}, {"factor", to_json(m.factor)}, {"ok", m.ok}});
    }
    out["multiples"] = std::move(mults);
  }
  return out;
}

json to_json(const SquareFreeDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"factor", to_json(f.factor)}, {"text", render(f.factor)}, {"multiplicity", f.multiplicity}});
  }
  return {{"constant", to_json(d.constant)}, {"factors", std::move(factors)}};
}

Poly poly_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
  const int degree = j.at("degree").get<int>();
  Poly p(std::move(coeffs));
  if (p.degree() != degree) throw Error(ErrorCode::ParseError, "degree field disagrees with coefficients");
  return p;
}

}  // namespace nestsub
