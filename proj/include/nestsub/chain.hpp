#pragma once

#include <span>
#include <vector>

namespace nestsub {

// A validated degree chain j_0 = m > j_1 > ... > j_t >= 0 for a pair of
// input polynomials of degrees m >= n, with j_1 <= n.
class DegreeChain {
 public:
  DegreeChain(int m, int n, std::vector<int> chain);

  int m() const { return m_; }
  int n() const { return n_; }
  // t, the number of stages.
  int depth() const { return static_cast<int>(chain_.size()) - 1; }
  // j_k for k = 0..t.
  int j(int k) const;
  std::span<const int> values() const { return chain_; }

  // Throws IndexOutOfRange unless 1 <= k <= t and j is in the family's range:
  // 0 <= j < n for k = 1, 0 <= j <= j_{k-1} - 2 for k >= 2. With
  // `allow_stage_degree`, j = j_k is accepted as well (the recursion needs the
  // level-k polynomial at the gcd degree even when j_k = j_{k-1} - 1).
  void require_index(int k, int j, bool allow_stage_degree = false) const;

 private:
  int m_;
  int n_;
  std::vector<int> chain_;
};

}  // namespace nestsub
