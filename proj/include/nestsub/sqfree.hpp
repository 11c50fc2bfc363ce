#pragma once

#include <vector>

#include "nestsub/poly.hpp"

namespace nestsub {

struct SquareFreeFactor {
  Poly factor;        // primitive, positive leading coefficient
  int multiplicity = 0;
};

struct SquareFreeDecomposition {
  Rat constant;                          // p = constant * prod factor^multiplicity
  std::vector<SquareFreeFactor> factors;  // ascending multiplicity
};

// Square-free decomposition read off the recursive PRS of (p, p'): stage k
// ends in a multiple of G_k = gcd(G_{k-1}, G_{k-1}'), and
// Q_k = (G_{k-1}/G_k) / (G_k/G_{k+1}) collects the factors of multiplicity k.
SquareFreeDecomposition sqfree(const Poly& p);

}  // namespace nestsub
