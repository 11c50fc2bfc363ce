#include "nestsub/subres_recursive.hpp"

#include <string>

#include "nestsub/error.hpp"
#include "nestsub/families.hpp"
#include "nestsub/subres_classic.hpp"
#include "nestsub/subres_nested.hpp"

namespace nestsub {

Dims rec_dims(const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  if (k == 1) return {chain.m() + chain.n() - j, chain.m() + chain.n() - 2L * j};
  long cols = chain.m() + chain.n() - 2L * chain.j(1);
  for (int l = 2; l <= k - 1; ++l) cols *= 2L * chain.j(l - 1) - 2L * chain.j(l) - 1;
  cols *= 2L * chain.j(k - 1) - 2L * j - 1;
  return {cols + j, cols};
}

RecLayout rec_layout(const DegreeChain& chain, int k, int j) {
  if (k < 2) throw Error(ErrorCode::IndexOutOfRange, "recursive layout is defined for k >= 2");
  chain.require_index(k, j, true);
  const long jp = chain.j(k - 1);
  RecLayout lay;
  lay.block_width = rec_dims(chain, k - 1, static_cast<int>(jp)).cols;
  lay.upper_block_rows = lay.block_width - 1;
  const long n_plain = jp - 1 - j;
  const long n_deriv = jp - j;
  lay.upper_diag_count = n_plain + n_deriv;
  for (long c = 0; c < n_plain; ++c) lay.lower_blocks.push_back({false, c, c * lay.block_width});
  for (long c = 0; c < n_deriv; ++c) {
    lay.lower_blocks.push_back({true, c, (n_plain + c) * lay.block_width});
  }
  lay.total_cols = lay.upper_diag_count * lay.block_width;
  lay.total_rows = lay.upper_diag_count * lay.upper_block_rows + (2 * jp - 1 - j);
  return lay;
}

RecursiveSubresultants::RecursiveSubresultants(Poly f, Poly g, DegreeChain chain, bool strict_layout)
    : f_(std::move(f)), g_(std::move(g)), chain_(std::move(chain)), strict_(strict_layout) {
  if (f_.degree() != chain_.m() || g_.degree() != chain_.n()) {
    throw Error(ErrorCode::BadChain, "chain degrees do not match the inputs");
  }
}

Mat RecursiveSubresultants::build(int k, int j) const {
  if (k == 1) return subres_matrix(f_, g_, j);
  const int jp = chain_.j(k - 1);
  const Mat prev = build(k - 1, jp);
  const RecLayout lay = rec_layout(chain_, k, j);
  const auto u = static_cast<std::size_t>(lay.block_width);
  if (prev.cols() != u || prev.rows() != u + static_cast<std::size_t>(jp)) {
    throw Error(ErrorCode::InvariantBreach, "previous recursive matrix has unexpected shape");
  }
  const auto ujp = static_cast<std::size_t>(jp);
  const Mat upper = prev.block(0, 0, u - 1, u);
  const Mat lower = prev.block(u - 1, 0, ujp + 1, u);
  Mat lower_deriv(ujp, u);
  for (std::size_t r = 0; r < ujp; ++r) {
    const Rat scale = static_cast<long>(ujp - r);  // row r holds x^(jp - r)
    for (std::size_t c = 0; c < u; ++c) lower_deriv(r, c) = lower(r, c) * scale;
  }

  Mat out(static_cast<std::size_t>(lay.total_rows), static_cast<std::size_t>(lay.total_cols));
  for (long b = 0; b < lay.upper_diag_count; ++b) {
    out.set_block(static_cast<std::size_t>(b) * (u - 1), static_cast<std::size_t>(b) * u, upper);
  }
  const auto lower_top = static_cast<std::size_t>(lay.upper_diag_count) * (u - 1);
  for (const auto& blk : lay.lower_blocks) {
    out.set_block(lower_top + static_cast<std::size_t>(blk.top_row_offset),
                  static_cast<std::size_t>(blk.col_offset), blk.derivative ? lower_deriv : lower);
  }
  const Dims expected = rec_dims(chain_, k, j);
  if (static_cast<long>(out.rows()) != expected.rows || static_cast<long>(out.cols()) != expected.cols) {
    throw Error(ErrorCode::InvariantBreach, "recursive matrix dimensions disagree with rec_dims");
  }
  return out;
}

Mat RecursiveSubresultants::matrix(int k, int j) const {
  chain_.require_index(k, j, true);
  if (strict_ && k >= 3 && k > layout_validated_depth()) {
    throw Error(ErrorCode::LayoutUnresolved,
                "recursive layout not validated at stage " + std::to_string(k));
  }
  return build(k, j);
}

Poly RecursiveSubresultants::subresultant(int k, int j) const {
  return determinant_polynomial(matrix(k, j), j);
}

Mat rec_subres_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j,
                      bool strict_layout) {
  return RecursiveSubresultants(f, g, chain, strict_layout).matrix(k, j);
}

Poly rec_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j,
                      bool strict_layout) {
  return RecursiveSubresultants(f, g, chain, strict_layout).subresultant(k, j);
}

namespace {

bool layout_holds_at(int depth) {
  const auto inst = gcd_chain_family(depth);
  const DegreeChain& chain = inst.chain;
  const RecursiveSubresultants rec(inst.f, inst.g, chain);
  const NestedSubresultants nes(inst.f, inst.g, chain);
  const int k = depth;
  for (int j = chain.j(k - 1) - 2; j >= 0; --j) {
    const Thm1Constants c = thm1_constants(chain, k, j);
    if (nes.subresultant(k, j) != rec.subresultant(k, j) * c.predicted_factor) return false;
  }
  return true;
}

}  // namespace

int layout_validated_depth() {
  static const int depth = [] {
    int d = 2;
    while (d < 4 && layout_holds_at(d + 1)) ++d;
    return d;
  }();
  return depth;
}

}  // namespace nestsub
