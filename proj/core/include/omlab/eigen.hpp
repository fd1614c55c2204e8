#pragma once

#include <functional>
#include <vector>

#include "omlab/complex_matrix.hpp"

namespace omlab {

// Eigendecomposition of a Hermitian matrix: m = vectors * diag(values) * vectors^*.
// values are sorted descending; vector columns are unit eigenvectors.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi sweeps with unitary 2x2 rotations. Converged when the
// off-diagonal Frobenius mass drops below tols::eigen_converge * (1 + ||m||_F);
// gives up after tols::max_jacobi_sweeps sweeps.
//
// Throws NotHermitian when ||m - m*||_F exceeds tols::kernel * (1 + ||m||_F),
// NoConvergence at the sweep cap.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

// Same contract, but skips eigenvector accumulation. The cheap path for norms
// and the numerical-radius scan.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Largest singular value sqrt(lambda_max(m* m)), clamped at zero. Accepts
// rectangular input.
double operator_norm(const ComplexMatrix& m);

// |m| = (m* m)^{1/2} for square m, via the eigendecomposition of m* m with
// eigenvalues clamped at zero before the square root.
ComplexMatrix matrix_abs(const ComplexMatrix& m);

using RealFunction = std::function<double(double)>;

// f(m) = V diag(f(lambda_i)) V* for Hermitian psd m; eigenvalues are clamped
// at zero before applying f. Throws NegativeSpectrum when some eigenvalue
// falls below -tols::psd_slack * (1 + ||m||).
ComplexMatrix spectral_function(const ComplexMatrix& m, const RealFunction& f);

// Nearest psd matrix to the Hermitian part of m: eigenvalues clamped at zero,
// no matter how negative. The projection step used by the sharpness search.
ComplexMatrix psd_projection(const ComplexMatrix& m);

}  // namespace omlab
