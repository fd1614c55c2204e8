#pragma once

#include <cmath>

// Every tolerance used by the library lives here. All comparisons are
// relative with an additive guard: a quantity q is tested against
// tol * (1 + |scale|) so that tiny matrices behave like absolute
// comparisons and large matrices like relative ones.
namespace omlab::tols {

// Slack tolerance for inequality checks (overridable per call / via CLI).
inline constexpr double check = 1e-8;

// Kernel-level agreement: hermitian symmetry tests, reconstruction,
// cartesian round trips.
inline constexpr double kernel = 1e-10;

// Jacobi eigensolver stops once the off-diagonal Frobenius mass drops
// below eigen_converge * (1 + frobenius(input)).
inline constexpr double eigen_converge = 1e-13;
inline constexpr int max_jacobi_sweeps = 100;

// Numerical radius: grid size over [0, 2*pi) and the bracket width the
// golden-section refinement drives every grid-local maximum down to.
inline constexpr int default_resolution = 720;
inline constexpr double theta_width = 1e-12;

// Spectral clamp: eigenvalues of a nominally psd matrix may dip below
// zero by at most psd_slack * (1 + norm) before spectral_function and
// friends refuse the input.
inline constexpr double psd_slack = 1e-8;

// Additive margin a sampled Cauchy-Schwarz violation must clear before
// it is reported as a witness.
inline constexpr double witness_margin = 1e-10;

// Relative tolerance with additive-1 guard.
inline double rel(double tol, double scale) { return tol * (1.0 + std::abs(scale)); }

}  // namespace omlab::tols
