#pragma once

#include "omlab/complex_matrix.hpp"
#include "omlab/constants.hpp"

namespace omlab {

// Numerical radius w(m) = max_theta lambda_max(Re(e^{i theta} m)) computed on a
// uniform grid of `resolution` angles over [0, 2*pi), then refined by
// golden-section search around every grid-local maximum down to a bracket of
// width tols::theta_width. Lies in [||m||/2, ||m||] up to kernel error.
double numerical_radius(const ComplexMatrix& m, int resolution = tols::default_resolution);

// Closed form for a real 2x2 matrix [[a, b], [c, d]]:
// (|a + d| + sqrt((a - d)^2 + (b + c)^2)) / 2.
double radius_2x2_real(double a, double b, double c, double d);

// Spectral radius of [[a, b], [c, d]] with nonnegative entries:
// ((a + d) + sqrt((a - d)^2 + 4 b c)) / 2. Throws NegativeEntry.
double spectral_radius_2x2_nonneg(double a, double b, double c, double d);

// max |lambda_i| of a Hermitian matrix.
double spectral_radius_hermitian(const ComplexMatrix& m);

}  // namespace omlab
