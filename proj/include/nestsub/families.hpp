#pragma once

#include <cstdint>
#include <string>

#include "nestsub/chain.hpp"
#include "nestsub/poly.hpp"

namespace nestsub {

// An input pair together with the degree chain of its recursive PRS.
struct Instance {
  Poly f;
  Poly g;
  DegreeChain chain;
  std::uint64_t seed = 0;
};

// Chain from the complete recursive PRS of (f, g).
Instance make_instance(Poly f, Poly g);

// f = D (x^2 + x + 3), g = D (x + 3) with D = ((x-1)(x+2))^(depth-1).
// depth 3 is the (m, n, j_1, j_2) = (6, 5, 4, 2) profile. The gcd factor is
// deliberately not even: with (x-1)(x+1) the stage-3 U is singular.
Instance gcd_chain_family(int depth);

// x^8 + x^6 - 3x^4 - 3x^3 + 8x^2 + 2x - 5 and 3x^6 + 5x^4 - 4x^2 - 9x + 21.
Instance knuth_pair();

// (x-1)^2 (x+1)^2 (x+2) and (x-1)^2 (x+1)^2: chain (5, 4, 2, 0).
Instance deg5_deg4_family();

// Integer pair f = D A, g = D B with 2 <= deg g < deg f <= max_deg and a
// random gcd D carrying repeated factors, so the recursive PRS has t >= 2.
// Deterministic in `seed`.
Instance random_gcd_chain_pair(std::uint64_t seed, int max_deg);

// Per-trial seed derived from a master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace nestsub
