#include "nestsub/matrix.hpp"

#include <cassert>
#include <numeric>

#include "nestsub/error.hpp"

namespace nestsub {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::IndexOutOfRange, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::select_rows(std::span<const std::size_t> indices) const {
  Mat out(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index");
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(indices[r], c);
  }
  return out;
}

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "block outside matrix");
  }
  Mat out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  return out;
}

void Mat::set_block(std::size_t row0, std::size_t col0, const Mat& src) {
  if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "block outside matrix");
  }
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) (*this)(row0 + r, col0 + c) = src(r, c);
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

namespace {

Int bareiss_det(std::vector<Int> a, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * n + c]; };
  Int prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      negate = !negate;
    }
    const Int& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int& e = at(i, j);
        e = e * pivot - at(i, k) * at(k, j);
        // Sylvester's identity makes this division exact.
        assert(mpz_divisible_p(e.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  Int d = at(n - 1, n - 1);
  return negate ? Int(-d) : d;
}

void require_square(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
}

}  // namespace

Rat det(const Mat& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<Int> ints(n * n);
  Int scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Int row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rat& v = m(r, c);
      ints[r * n + c] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }
  Rat d(bareiss_det(std::move(ints), n), scale);
  d.canonicalize();
  return d;
}

Rat det_cofactor(const Mat& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n > 8) throw Error(ErrorCode::TooLarge, "cofactor expansion limited to order 8");
  if (n == 0) return Rat(1);
  if (n == 1) return m(0, 0);
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Rat term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

RowSolver::RowSolver(const Mat& u) : n_(u.rows()), lu_(u.transpose()), perm_(u.rows()), det_(1) {
  if (!u.is_square()) throw Error(ErrorCode::NotSquare, "row system matrix must be square");
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && lu_(p, k) == 0) ++p;
    if (p == n_) {
      det_ = 0;
      return;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(lu_(k, c), lu_(p, c));
      std::swap(perm_[k], perm_[p]);
      det_ = -det_;
    }
    det_ *= lu_(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (lu_(i, k) == 0) continue;
      Rat factor = lu_(i, k) / lu_(k, k);
      lu_(i, k) = factor;
      for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

std::vector<Rat> RowSolver::solve(std::span<const Rat> c) const {
  if (c.size() != n_) throw Error(ErrorCode::IndexOutOfRange, "right-hand side length");
  if (singular()) throw Error(ErrorCode::SingularU, "U is singular");
  std::vector<Rat> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rat acc = c[perm_[i]];
    for (std::size_t k = 0; k < i; ++k) acc -= lu_(i, k) * y[k];
    y[i] = acc;
  }
  std::vector<Rat> x(n_);
  for (std::size_t i = n_; i-- > 0;) {
    Rat acc = y[i];
    for (std::size_t k = i + 1; k < n_; ++k) acc -= lu_(i, k) * x[k];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

std::vector<Rat> solve_row_system(const Mat& u, std::span<const Rat> c) {
  return RowSolver(u).solve(c);
}

Mat sylvester_condense(const Mat& a, std::size_t k) {
  require_square(a);
  const std::size_t n = a.rows();
  if (k < 1 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "condensation index k");
  if (det(a.block(0, 0, k, k)) == 0) {
    throw Error(ErrorCode::SingularPivot, "leading principal minor vanishes");
  }
  Mat out(n - k, n - k);
  Mat bordered(k + 1, k + 1);
  bordered.set_block(0, 0, a.block(0, 0, k, k));
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = k; j < n; ++j) {
      for (std::size_t t = 0; t < k; ++t) {
        bordered(t, k) = a(t, j);
        bordered(k, t) = a(i, t);
      }
      bordered(k, k) = a(i, j);
      out(i - k, j - k) = det(bordered);
    }
  }
  return out;
}

}  // namespace nestsub
