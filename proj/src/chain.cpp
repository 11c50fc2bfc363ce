#include "nestsub/chain.hpp"

#include <string>

#include "nestsub/error.hpp"

namespace nestsub {

DegreeChain::DegreeChain(int m, int n, std::vector<int> chain) : m_(m), n_(n), chain_(std::move(chain)) {
  if (n < 0 || m < n) throw Error(ErrorCode::BadChain, "input degrees must satisfy m >= n >= 0");
  if (chain_.size() < 2) throw Error(ErrorCode::BadChain, "chain needs at least j_0 and j_1");
  if (chain_[0] != m) throw Error(ErrorCode::BadChain, "chain must start at j_0 = m");
  if (chain_[1] > n) throw Error(ErrorCode::BadChain, "j_1 exceeds deg g");
  if (chain_[1] == n && m == n) throw Error(ErrorCode::BadChain, "j_1 = n requires m > n");
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (chain_[i] >= chain_[i - 1] || chain_[i] < 0) {
      throw Error(ErrorCode::BadChain, "chain must be strictly decreasing and nonnegative");
    }
  }
}

int DegreeChain::j(int k) const {
  if (k < 0 || k > depth()) throw Error(ErrorCode::IndexOutOfRange, "stage index k=" + std::to_string(k));
  return chain_[static_cast<std::size_t>(k)];
}

void DegreeChain::require_index(int k, int j, bool allow_stage_degree) const {
  if (k < 1 || k > depth()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "stage k=" + std::to_string(k) + " outside [1, " + std::to_string(depth()) + "]");
  }
  if (allow_stage_degree && j == chain_[static_cast<std::size_t>(k)]) return;
  const int hi = (k == 1) ? n_ - 1 : chain_[static_cast<std::size_t>(k - 1)] - 2;
  if (j < 0 || j > hi) {
    throw Error(ErrorCode::IndexOutOfRange, "j=" + std::to_string(j) + " outside [0, " +
                                                std::to_string(hi) + "] at stage " + std::to_string(k));
  }
}

}  // namespace nestsub
