#include "nestsub/subres_classic.hpp"

#include <numeric>
#include <string>

#include "nestsub/error.hpp"

namespace nestsub {

namespace {

// Column block of `count` down-shifted copies of p's descending coefficients.
void put_shifted_columns(Mat& out, const Poly& p, int degree, int count, std::size_t col0) {
  const auto column = p.descending(degree);
  for (int c = 0; c < count; ++c) {
    for (std::size_t r = 0; r < column.size(); ++r) {
      out(r + static_cast<std::size_t>(c), col0 + static_cast<std::size_t>(c)) = column[r];
    }
  }
}

}  // namespace

Mat sylvester_matrix(const Poly& f, const Poly& g) {
  const int m = f.nominal_degree();
  const int n = g.nominal_degree();
  if (n < 1 || m < n) {
    throw Error(ErrorCode::DegenerateDegrees,
                "sylvester_matrix requires deg f >= deg g >= 1 (got " + std::to_string(m) + ", " +
                    std::to_string(n) + ")");
  }
  return subres_matrix(f, g, 0);
}

Mat subres_matrix(const Poly& f, const Poly& g, int j) {
  const int m = f.nominal_degree();
  const int n = g.nominal_degree();
  if (m < n || n < 0) throw Error(ErrorCode::DegenerateDegrees, "subres_matrix requires deg f >= deg g >= 0");
  const bool boundary = (j == n && m > n);
  if (j < 0 || (j >= n && !boundary)) {
    throw Error(ErrorCode::IndexOutOfRange, "subresultant index j=" + std::to_string(j) +
                                                " outside [0, " + std::to_string(n) + ")");
  }
  const int rows = m + n - j;
  const int cols = m + n - 2 * j;
  Mat out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  put_shifted_columns(out, f, m, n - j, 0);
  put_shifted_columns(out, g, n, m - j, static_cast<std::size_t>(n - j));
  return out;
}

Mat tau_selection(const Mat& m, int j, int tau) {
  if (j < 0 || tau < 0 || tau > j || m.rows() != m.cols() + static_cast<std::size_t>(j) ||
      m.cols() == 0) {
    throw Error(ErrorCode::IndexOutOfRange, "tau selection (j=" + std::to_string(j) +
                                                ", tau=" + std::to_string(tau) + ")");
  }
  std::vector<std::size_t> rows(m.cols());
  std::iota(rows.begin(), rows.end() - 1, std::size_t{0});
  rows.back() = m.cols() - 1 + static_cast<std::size_t>(j - tau);
  return m.select_rows(rows);
}

Poly determinant_polynomial(const Mat& m, int j) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(j) + 1);
  for (int tau = 0; tau <= j; ++tau) coeffs[static_cast<std::size_t>(tau)] = det(tau_selection(m, j, tau));
  return Poly::with_nominal(std::move(coeffs), j);
}

Mat subres_matrix_tau(const Poly& f, const Poly& g, int j, int tau) {
  return tau_selection(subres_matrix(f, g, j), j, tau);
}

Poly subresultant_poly(const Poly& f, const Poly& g, int j) {
  return determinant_polynomial(subres_matrix(f, g, j), j);
}

}  // namespace nestsub
