#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nestsub/rational.hpp"

namespace nestsub {

// Dense row-major matrix over Q.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  // Rows in the given order (indices may repeat).
  Mat select_rows(std::span<const std::size_t> indices) const;
  Mat block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Mat& src);
  Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Rows with
// non-integer entries are pre-scaled to integers and the scale divided out.
Rat det(const Mat& m);

// Minor expansion along the first row; independent oracle for det, order <= 8.
Rat det_cofactor(const Mat& m);

// Factorization of a square U reused for many row systems x * U = c.
class RowSolver {
 public:
  explicit RowSolver(const Mat& u);

  std::size_t order() const { return n_; }
  const Rat& determinant() const { return det_; }
  bool singular() const { return det_ == 0; }

  // Throws SingularU when U is singular.
  std::vector<Rat> solve(std::span<const Rat> c) const;

 private:
  // LU of U^T with row pivoting: perm_ * U^T = lower_ * upper_ (lower unit-diagonal, stored together).
  std::size_t n_ = 0;
  Mat lu_;
  std::vector<std::size_t> perm_;
  Rat det_;
};

// Solves x * u = c exactly.
std::vector<Rat> solve_row_system(const Mat& u, std::span<const Rat> c);

// Matrix of bordered determinants a_{ij}^{(k)}, i, j > k (1-based), that
// enters Sylvester's identity: det(a) * (a_kk^{(k-1)})^{n-k-1} = det(result).
Mat sylvester_condense(const Mat& a, std::size_t k);

}  // namespace nestsub
