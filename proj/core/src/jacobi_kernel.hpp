#pragma once

#include <cstddef>

#include "omlab/complex_matrix.hpp"

// Internal Jacobi kernel shared by eigen.cpp and radius.cpp. Not installed.
namespace omlab::detail {

// Off-diagonal Frobenius mass of the n x n row-major matrix a.
double off_diagonal_mass(const cplx* a, std::size_t n);

// In-place cyclic complex Jacobi on an exactly Hermitian matrix stored
// row-major in a. If v is non-null it must hold the identity on entry and
// accumulates the rotations (columns become eigenvectors). Returns false
// when the off-diagonal mass is still above conv_tol after the sweep cap.
// On success the diagonal of a holds the (unsorted, real) eigenvalues.
bool jacobi_inplace(cplx* a, std::size_t n, cplx* v, double conv_tol);

// Convergence threshold for a matrix with the given Frobenius norm.
double jacobi_threshold(double frobenius);

}  // namespace omlab::detail
