#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nestsub/chain.hpp"
#include "nestsub/error.hpp"
#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"
#include "nestsub/subres_recursive.hpp"

namespace nestsub {

// (m+n-2(k-1)-2j) + j rows, m+n-2(k-1)-2j columns.
Dims reduced_dims(int m, int n, int k, int j);

// Level-k data shared by every reduced nested subresultant matrix N̂^(k,j).
//
// N̂^(k-1, j_{k-1}) minus its bottom j_{k-1}+1 rows is (U | v) with U square.
// Every entry of H = N^(j)(Â, Â') is a bordered determinant
//   | U      v |
//   | b_pq  g_pq |
// whose bottom row is a (scaled) bottom row of N̂^(k-1, j_{k-1}).
struct ReducedLevel {
  int k = 0;
  int stage_degree = 0;          // j_{k-1}
  Mat u;                         // U^(k)
  std::vector<Rat> v;            // v^(k)
  std::vector<Rat> a_coeffs;     // Â_tau^(k-1), tau = 0..j_{k-1} (ascending)
  std::vector<std::vector<Rat>> border_b;  // bottom row for x^tau without its last entry
  std::vector<Rat> border_g;               // last entry of that row
  std::shared_ptr<const RowSolver> solver;  // one factorization of U per level
};

// One entry of H as a multiple of a coefficient of Â: scale * Â_index.
struct HEntry {
  bool zero = true;
  int index = 0;
  long scale = 0;
};

class ReducedSubresultants {
 public:
  ReducedSubresultants(Poly f, Poly g, DegreeChain chain);

  const DegreeChain& chain() const { return chain_; }

  // N̂^(k,j); k = 1 gives N^(j)(f, g). Throws SingularU if a row solve against
  // a singular U^(k) is needed.
  Mat matrix(int k, int j) const;
  // Ŝ_{k,j}, nominal degree j.
  Poly subresultant(int k, int j) const;
  // Level data for k = 2..t.
  const ReducedLevel& level(int k) const;
  // Numeric H = N^(j)(Â^(k-1), d/dx Â^(k-1)).
  Mat h_matrix(int k, int j) const;
  // Structure of H: which coefficient of Â (and which multiple) sits at (p, q).
  std::vector<std::vector<HEntry>> h_pattern(int k, int j) const;

 private:
  Mat build(int k, int j) const;
  ReducedLevel make_level(int k) const;

  Poly f_;
  Poly g_;
  DegreeChain chain_;
  std::vector<ReducedLevel> levels_;   // index k-2
  std::optional<Error> level_error_;
};

Mat reduced_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j);
Poly reduced_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j);

// Scalars relating nested and reduced nested subresultants:
//   S̃_{k,j} = (R̂_{k-1} B̂_{k-1})^{J_{k,j}} B̂_{k,j} Ŝ_{k,j},
// B̂_{k,j} = |U^(k)|^{J_{k,j}-1}, B̂_l = B̂_{l,j_l} for l >= 2, B̂_1 = 1,
// R̂_1 = 1 and R̂_l = (R̂_{l-1} B̂_{l-1})^{J_{l,j_l}}.
struct Thm2Constants {
  long J_kj = 0;
  long I_kj = 0;
  Rat B_hat_kj = 1;
  Rat B_hat_prev = 1;   // B̂_{k-1}
  Rat R_hat_prev = 1;   // R̂_{k-1}
  Rat predicted_factor = 1;
};

// Convention for B̂_2. `Consistent` (the default) uses |U^(2)|^{J_{2,j_2}-1};
// `LiteralUnit` pins B̂_2 = 1 as the closed-form statement reads, which only
// agrees when J_{2,j_2} = 1 or |U^(2)| = 1.
enum class BHatConvention { Consistent, LiteralUnit };

Thm2Constants thm2_constants(const ReducedSubresultants& reduced, int k, int j,
                             BHatConvention convention = BHatConvention::Consistent);
Thm2Constants thm2_constants(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j);

}  // namespace nestsub
