#pragma once

#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"

namespace nestsub {

// (m+n) x (m+n) Sylvester matrix: n down-shifted columns of f's coefficients
// (descending powers) followed by m columns of g's. Degrees are the nominal
// degrees of f and g; requires m >= n >= 1.
Mat sylvester_matrix(const Poly& f, const Poly& g);

// j-th subresultant matrix N^(j)(f, g): the left n-j f-columns and the left
// m-j g-columns of the Sylvester matrix, (m+n-j) x (m+n-2j).
//
// Defined for 0 <= j < n. j == n is accepted when m > n (no f-columns,
// m-n g-columns); the recursive constructions need it when g divides f.
Mat subres_matrix(const Poly& f, const Poly& g, int j);

// Square selection shared by every subresultant family: for a matrix with
// rows == cols + j, the top cols-1 rows followed by row cols-1+(j-tau).
Mat tau_selection(const Mat& m, int j, int tau);

// sum_tau det(tau_selection(m, j, tau)) x^tau, carried with nominal degree j.
Poly determinant_polynomial(const Mat& m, int j);

Mat subres_matrix_tau(const Poly& f, const Poly& g, int j, int tau);

// The classical j-th subresultant polynomial.
Poly subresultant_poly(const Poly& f, const Poly& g, int j);

}  // namespace nestsub
