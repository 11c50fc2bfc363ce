#pragma once

#include <utility>
#include <vector>

#include "nestsub/chain.hpp"
#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"

namespace nestsub {

struct Dims {
  long rows = 0;
  long cols = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

// Row and column counts of the (k,j)-th recursive subresultant matrix:
//   cols = (m+n-2j_1) * prod_{l=2}^{k-1} (2j_{l-1}-2j_l-1) * (2j_{k-1}-2j-1),
//   rows = cols + j;  k = 1 gives (m+n-j, m+n-2j).
Dims rec_dims(const DegreeChain& chain, int k, int j);

// Block placement of one recursive subresultant matrix.
//
// Let N = N̄^(k-1, j_{k-1}) with u columns. N_U is N without its bottom
// j_{k-1}+1 rows, N_L those rows, and N_L' is N_L with its row for x^tau
// scaled by tau and the x^0 row dropped (the coefficient rows of the
// derivative). The matrix mirrors N^(j)(P_1, P_2) of the stage-k pair:
//   upper block: diag(N_U, ..., N_U), one copy per block column;
//   lower block: j_{k-1}-j-1 copies of N_L followed by j_{k-1}-j copies of
//   N_L', each block column one row lower than its left neighbour within
//   its group (the staircase of a Sylvester matrix).
// The upper block count 2j_{k-1}-2j-1 depends on j, not j_k: it is the only
// count consistent with the row/column formula.
struct RecLayout {
  long block_width = 0;        // u, columns of N̄^(k-1, j_{k-1})
  long upper_block_rows = 0;   // u - 1
  long upper_diag_count = 0;   // 2j_{k-1} - 2j - 1
  struct LowerBlock {
    bool derivative = false;   // N_L' (true) or N_L (false)
    long top_row_offset = 0;   // within the lower block
    long col_offset = 0;
  };
  std::vector<LowerBlock> lower_blocks;
  long total_rows = 0;
  long total_cols = 0;
};

// Layout for k >= 2.
RecLayout rec_layout(const DegreeChain& chain, int k, int j);

class RecursiveSubresultants {
 public:
  // With `strict_layout`, stages k >= 3 are refused unless the layout has
  // been confirmed against the nested family at that depth (see
  // layout_validated_depth).
  RecursiveSubresultants(Poly f, Poly g, DegreeChain chain, bool strict_layout = false);

  const DegreeChain& chain() const { return chain_; }
  Mat matrix(int k, int j) const;
  Poly subresultant(int k, int j) const;

 private:
  Mat build(int k, int j) const;

  Poly f_;
  Poly g_;
  DegreeChain chain_;
  bool strict_;
};

Mat rec_subres_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j,
                      bool strict_layout = false);
Poly rec_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j,
                      bool strict_layout = false);

// Deepest stage (2, 3 or 4) at which the recursive/nested equality holds for
// every j on the canonical gcd-chain family of that depth. Computed once.
int layout_validated_depth();

}  // namespace nestsub
