#pragma once

#include <string_view>
#include <vector>

#include "nestsub/poly.hpp"

namespace nestsub {

enum class DivisionRule { Euclidean, Primitive, Subresultant };

std::string_view to_string(DivisionRule rule);
DivisionRule parse_division_rule(std::string_view name);

// One polynomial remainder sequence P_1, ..., P_l with
//   alpha_i * P_{i-2} = q_{i-1} * P_{i-1} + beta_i * P_i,   i = 3..l.
// alphas/betas/quotients are indexed from i = 3, so alphas[0] is alpha_3.
struct PrsStage {
  DivisionRule rule = DivisionRule::Subresultant;
  std::vector<Poly> polys;
  std::vector<Rat> alphas;
  std::vector<Rat> betas;
  std::vector<Poly> quotients;
  // deg P_1 == deg P_2 was accepted; the strict decrease then starts at P_3.
  bool equal_degree_start = false;

  std::size_t length() const { return polys.size(); }
  const Poly& last() const { return polys.back(); }
  bool complete() const { return last().is_constant(); }
  std::vector<int> degrees() const;
  std::vector<Rat> leading() const;
  // d_i = n_i - n_{i+1}, i = 1..l-1.
  std::vector<int> gaps() const;
  // Every gap after the first equals one.
  bool normal() const;
};

// Remainder sequence of f and g under `rule`, stopping at the last nonzero
// element. Requires deg f >= deg g >= 0 and g != 0.
PrsStage prs(const Poly& f, const Poly& g, DivisionRule rule = DivisionRule::Subresultant);

struct RecursivePrs {
  std::vector<PrsStage> stages;   // k = 1..t
  std::vector<int> chain;         // j_0 = m, j_1, ..., j_t
  std::vector<Rat> gammas;        // last element of stage k = gamma_k * gcd
  bool complete = false;

  std::size_t depth() const { return stages.size(); }
};

// Iterates prs on (last element, its derivative) until the last element is a
// constant. gamma_k is taken against the primitive, positive-lc gcd.
RecursivePrs recursive_prs(const Poly& f, const Poly& g,
                           DivisionRule rule = DivisionRule::Subresultant);

// (j_0, ..., j_t); throws Incomplete for an incomplete sequence.
std::vector<int> degree_chain(const RecursivePrs& r);

}  // namespace nestsub
