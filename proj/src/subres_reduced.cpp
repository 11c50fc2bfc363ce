#include "nestsub/subres_reduced.hpp"

#include <string>

#include "nestsub/subres_classic.hpp"

namespace nestsub {

Dims reduced_dims(int m, int n, int k, int j) {
  if (k < 1 || j < 0) throw Error(ErrorCode::IndexOutOfRange, "reduced_dims index");
  const long cols = m + n - 2L * (k - 1) - 2L * j;
  return {cols + j, cols};
}

ReducedSubresultants::ReducedSubresultants(Poly f, Poly g, DegreeChain chain)
    : f_(std::move(f)), g_(std::move(g)), chain_(std::move(chain)) {
  if (f_.degree() != chain_.m() || g_.degree() != chain_.n()) {
    throw Error(ErrorCode::BadChain, "chain degrees do not match the inputs");
  }
  for (int k = 2; k <= chain_.depth(); ++k) {
    try {
      levels_.push_back(make_level(k));
    } catch (const Error& e) {
      level_error_ = e;
      break;
    }
  }
}

const ReducedLevel& ReducedSubresultants::level(int k) const {
  if (k < 2 || k > chain_.depth()) {
    throw Error(ErrorCode::IndexOutOfRange, "reduced level k=" + std::to_string(k));
  }
  const auto idx = static_cast<std::size_t>(k - 2);
  if (idx >= levels_.size()) throw *level_error_;
  return levels_[idx];
}

ReducedLevel ReducedSubresultants::make_level(int k) const {
  const int jp = chain_.j(k - 1);
  const Mat prev = build(k - 1, jp);
  const std::size_t c = prev.cols();
  if (prev.rows() != c + static_cast<std::size_t>(jp) || c == 0) {
    throw Error(ErrorCode::InvariantBreach, "previous reduced matrix has unexpected shape");
  }
  const long expected_order = chain_.m() + chain_.n() - 2L * (k - 2) - 2L * jp - 1;
  if (static_cast<long>(c) - 1 != expected_order) {
    throw Error(ErrorCode::InvariantBreach, "order of U disagrees with the size formula");
  }
  ReducedLevel lvl;
  lvl.k = k;
  lvl.stage_degree = jp;
  lvl.u = prev.block(0, 0, c - 1, c - 1);
  for (std::size_t r = 0; r + 1 < c; ++r) lvl.v.push_back(prev(r, c - 1));
  lvl.a_coeffs.resize(static_cast<std::size_t>(jp) + 1);
  lvl.border_b.resize(static_cast<std::size_t>(jp) + 1);
  lvl.border_g.resize(static_cast<std::size_t>(jp) + 1);
  for (int tau = 0; tau <= jp; ++tau) {
    const auto row = prev.row(c - 1 + static_cast<std::size_t>(jp - tau));
    const auto t = static_cast<std::size_t>(tau);
    lvl.border_b[t].assign(row.begin(), row.end() - 1);
    lvl.border_g[t] = row.back();
    lvl.a_coeffs[t] = det(tau_selection(prev, jp, tau));
  }
  if (lvl.a_coeffs.back() == 0) {
    throw Error(ErrorCode::VanishingLeading,
                "leading coefficient of Â^(" + std::to_string(k - 1) + ") vanishes");
  }
  lvl.solver = std::make_shared<const RowSolver>(lvl.u);
  return lvl;
}

std::vector<std::vector<HEntry>> ReducedSubresultants::h_pattern(int k, int j) const {
  chain_.require_index(k, j, true);
  if (k < 2) throw Error(ErrorCode::IndexOutOfRange, "H is defined for k >= 2");
  const int n1 = chain_.j(k - 1);
  const int n2 = n1 - 1;
  const int plain_cols = n2 - j;
  const int rows = n1 + n2 - j;
  const int cols = n1 + n2 - 2 * j;
  std::vector<std::vector<HEntry>> out(static_cast<std::size_t>(rows),
                                       std::vector<HEntry>(static_cast<std::size_t>(cols)));
  for (int p = 0; p < rows; ++p) {
    for (int q = 0; q < cols; ++q) {
      HEntry& e = out[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      if (q < plain_cols) {
        const int idx = p - q;
        if (idx >= 0 && idx <= n1) e = {false, n1 - idx, 1};
      } else {
        const int idx = p - (q - plain_cols);
        // x^e coefficient of Â' is (e+1) Â_{e+1}
        if (idx >= 0 && idx <= n2) e = {false, n2 - idx + 1, n2 - idx + 1};
      }
    }
  }
  return out;
}

Mat ReducedSubresultants::h_matrix(int k, int j) const {
  const ReducedLevel& lvl = level(k);
  const auto pattern = h_pattern(k, j);
  Mat h(pattern.size(), pattern.front().size());
  for (std::size_t p = 0; p < h.rows(); ++p) {
    for (std::size_t q = 0; q < h.cols(); ++q) {
      const HEntry& e = pattern[p][q];
      if (!e.zero) h(p, q) = lvl.a_coeffs[static_cast<std::size_t>(e.index)] * e.scale;
    }
  }
  return h;
}

Mat ReducedSubresultants::build(int k, int j) const {
  if (k == 1) return subres_matrix(f_, g_, j);
  const ReducedLevel& lvl = level(k);
  const auto pattern = h_pattern(k, j);
  const std::size_t order = lvl.u.rows();
  const std::size_t rows_h = pattern.size();
  const std::size_t cols_h = pattern.front().size();

  Mat out(order + rows_h, order + cols_h);
  out.set_block(0, 0, lvl.u);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t q = 0; q < cols_h; ++q) out(r, order + q) = lvl.v[r];

  // Border (b_pq | g_pq) of entry (p, q); all zero when H_pq = 0.
  auto border = [&](const HEntry& e, std::vector<Rat>& b, Rat& g) {
    b.assign(order, Rat(0));
    g = 0;
    if (e.zero) return;
    const auto idx = static_cast<std::size_t>(e.index);
    if (lvl.a_coeffs[idx] == 0) return;
    const Rat s = e.scale;
    for (std::size_t i = 0; i < order; ++i) b[i] = lvl.border_b[idx][i] * s;
    g = lvl.border_g[idx] * s;
  };

  std::vector<Rat> b_first, b_q, diff(order);
  Rat g_first, g_q;
  for (std::size_t p = 0; p < rows_h; ++p) {
    border(pattern[p][0], b_first, g_first);
    const std::size_t row = order + p;
    for (std::size_t i = 0; i < order; ++i) out(row, i) = b_first[i];
    out(row, order) = g_first;
    for (std::size_t q = 1; q < cols_h; ++q) {
      border(pattern[p][q], b_q, g_q);
      bool same = true;
      for (std::size_t i = 0; i < order; ++i) {
        diff[i] = b_first[i] - b_q[i];
        same = same && diff[i] == 0;
      }
      // Adding x * (U | v) to (b_pq | g_pq) leaves H_pq unchanged and turns
      // its border into b_{p,1}: x U = b_{p,1} - b_pq, h_pq = g_pq + x v.
      Rat h = g_q;
      if (!same) {
        const auto x = lvl.solver->solve(diff);
        for (std::size_t i = 0; i < order; ++i) h += x[i] * lvl.v[i];
      }
      out(row, order + q) = h;
    }
  }
  const Dims expected = reduced_dims(chain_.m(), chain_.n(), k, j);
  if (static_cast<long>(out.rows()) != expected.rows || static_cast<long>(out.cols()) != expected.cols) {
    throw Error(ErrorCode::InvariantBreach, "reduced matrix dimensions disagree with reduced_dims");
  }
  return out;
}

Mat ReducedSubresultants::matrix(int k, int j) const {
  chain_.require_index(k, j, true);
  return build(k, j);
}

Poly ReducedSubresultants::subresultant(int k, int j) const {
  return determinant_polynomial(matrix(k, j), j);
}

Mat reduced_matrix(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  return ReducedSubresultants(f, g, chain).matrix(k, j);
}

Poly reduced_subresultant(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j) {
  chain.require_index(k, j, true);
  return ReducedSubresultants(f, g, chain).subresultant(k, j);
}

Thm2Constants thm2_constants(const ReducedSubresultants& reduced, int k, int j, BHatConvention convention) {
  const DegreeChain& chain = reduced.chain();
  chain.require_index(k, j, true);
  Thm2Constants c;
  if (k == 1) {
    c.J_kj = chain.m() + chain.n() - 2L * j;
    c.I_kj = c.J_kj + j;
    return c;
  }
  auto big_j = [&](int l, int jj) { return 2L * chain.j(l - 1) - 2L * jj - 1; };
  auto u_det = [&](int l) { return reduced.level(l).solver->determinant(); };
  Rat r_hat = 1;  // R̂_1
  Rat b_hat = 1;  // B̂_1
  for (int l = 2; l <= k - 1; ++l) {
    const long j_l = big_j(l, chain.j(l));
    r_hat = pow(r_hat * b_hat, j_l);
    b_hat = (l == 2 && convention == BHatConvention::LiteralUnit) ? Rat(1) : pow(u_det(l), j_l - 1);
  }
  c.J_kj = big_j(k, j);
  c.I_kj = c.J_kj + j;
  c.R_hat_prev = r_hat;
  c.B_hat_prev = b_hat;
  c.B_hat_kj = pow(u_det(k), c.J_kj - 1);
  c.predicted_factor = pow(r_hat * b_hat, c.J_kj) * c.B_hat_kj;
  return c;
}

Thm2Constants thm2_constants(const Poly& f, const Poly& g, const DegreeChain& chain, int k, int j) {
  return thm2_constants(ReducedSubresultants(f, g, chain), k, j);
}

}  // namespace nestsub
