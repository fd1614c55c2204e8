#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "omlab/errors.hpp"

namespace omlab {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Dimensions are fixed at construction
// and strictly positive (a 0x0 matrix is rejected). Entries ingested
// from user data are checked finite; arithmetic preserves finiteness
// for finite inputs.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  // Row-wise literal, mainly for tests and small fixtures.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);  // matmul
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);

// Cartesian parts of a square matrix: re(m) = (m + m*)/2 and
// im(m) = (m - m*)/(2i), both Hermitian by construction, m = re + i*im.
ComplexMatrix hermitian_part(const ComplexMatrix& m);
ComplexMatrix skew_part_over_i(const ComplexMatrix& m);

// Frobenius test: ||m - m*||_F <= tol * (1 + ||m||_F).
bool is_hermitian(const ComplexMatrix& m, double tol);

bool all_finite(const ComplexMatrix& m);

}  // namespace omlab
