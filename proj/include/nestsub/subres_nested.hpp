#pragma once

#include <optional>
#include <vector>

#include "nestsub/chain.hpp"
#include "nestsub/error.hpp"
#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"

namespace nestsub {

// Nested subresultants: the level-k matrix is the j-th subresultant matrix of
// the level-(k-1) nested subresultant at the stage degree j_{k-1} and its
// derivative, so its entries are themselves determinants. Values are computed
// exactly level by level; nothing symbolic is kept.
class NestedSubresultants {
 public:
  NestedSubresultants(Poly f, Poly g, DegreeChain chain);

  const DegreeChain& chain() const { return chain_; }

  // Ñ^(k,j). For k > 1 it has 2j_{k-1}-1-j rows and 2j_{k-1}-1-2j columns.
  Mat matrix(int k, int j) const;
  // S̃_{k,j}, nominal degree j.
  Poly subresultant(int k, int j) const;
  // S̃_{k,j_k}, the polynomial the next level is built from (k = 1..t-1).
  const Poly& stage_poly(int k) const;

 private:
  Mat build(int k, int j) const;

  Poly f_;
  Poly g_;
  DegreeChain chain_;
  std::vector<Poly> stage_polys_;       // index k-1
  std::optional<Error> stage_error_;    // first level that could not be built
};

Mat nested_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j);
Poly nested_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j);

// Scalar bookkeeping relating nested and recursive subresultants:
//   S̃_{k,j} = R_{k-1}^{b_{k,j}} r_{k,j} S̄_{k,j}.
struct Thm1Constants {
  long u_prev = 0;  // u_{k-1}: column count of the level-(k-1) recursive matrix
  long u_kj = 0;
  long b_kj = 0;    // 2 j_{k-1} - 2 j - 1
  int r_kj = 1;     // (-1)^((u_{k-1} - 1)(1 + 2 + ... + (b_{k,j} - 1)))
  int R_prev = 1;   // R_{k-1}
  Rat predicted_factor = 1;
};

// k >= 1 (k = 1 gives the trivial constants); j in the stage range, or j = j_k.
Thm1Constants thm1_constants(const DegreeChain& chain, int k, int j);

}  // namespace nestsub
