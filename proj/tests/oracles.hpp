#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the determinant, PRS or subresultant code it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"

namespace oracle {

using nestsub::Mat;
using nestsub::Poly;
using nestsub::Rat;

// Leibniz expansion over all permutations. Order <= 7 keeps this cheap.
inline Rat leibniz_det(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain vectors, ascending powers, trailing zeros trimmed.
using Vec = std::vector<Rat>;

inline void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Vec to_vec(const Poly& p) { return Vec(p.coeffs().begin(), p.coeffs().end()); }
inline Poly to_poly(Vec v) { return Poly(std::move(v)); }

// Schoolbook long division over Q.
inline std::pair<Vec, Vec> long_divide(Vec a, const Vec& b) {
  trim(a);
  Vec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Vec monic(Vec v) {
  trim(v);
  if (v.empty()) return v;
  const Rat lead = v.back();
  for (auto& c : v) c /= lead;
  return v;
}

// Monic Euclid.
inline Vec monic_gcd(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = long_divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Vec diff(const Vec& v) {
  Vec d;
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Euclidean remainder sequence by long division: (f, g, r_1, r_2, ...).
inline std::vector<Vec> euclid_sequence(Vec f, Vec g) {
  std::vector<Vec> out{f, g};
  while (true) {
    Vec r = long_divide(out[out.size() - 2], out.back()).second;
    if (r.empty()) break;
    out.push_back(std::move(r));
  }
  return out;
}

// Yun's algorithm: monic square-free factors a_1, a_2, ... with p ~ prod a_i^i.
inline std::vector<Vec> yun(const Vec& p) {
  std::vector<Vec> out;
  Vec a0 = monic_gcd(p, diff(p));
  Vec b = long_divide(p, a0).first;
  Vec c = long_divide(diff(p), a0).first;
  Vec d = c;
  {
    Vec bd = diff(b);
    for (std::size_t i = 0; i < std::max(d.size(), bd.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      d[i] -= i < bd.size() ? bd[i] : Rat(0);
    }
    trim(d);
  }
  while (b.size() > 1) {
    Vec a = monic_gcd(b, d);
    out.push_back(a);
    b = long_divide(b, a).first;
    c = long_divide(d, a).first;
    Vec bd = diff(b);
    d = c;
    for (std::size_t i = 0; i < std::max(d.size(), bd.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      d[i] -= i < bd.size() ? bd[i] : Rat(0);
    }
    trim(d);
  }
  return out;
}

inline Poly random_int_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return Poly(std::move(c));
}

inline Poly random_rat_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  while (c.back() == 0) c.back() = Rat(den(rng), den(rng));
  c.back().canonicalize();
  return Poly(std::move(c));
}

inline Mat random_int_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coeff(rng);
  return m;
}

}  // namespace oracle
