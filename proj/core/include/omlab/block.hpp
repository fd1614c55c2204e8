#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omlab/complex_matrix.hpp"
#include "omlab/constants.hpp"

namespace omlab {

// 2x2 operator matrix [[t11, t12], [t21, t22]] with square blocks of equal
// dimension.
struct Block2x2 {
  Block2x2(ComplexMatrix m11, ComplexMatrix m12, ComplexMatrix m21, ComplexMatrix m22);

  std::size_t block_dim() const { return t11.rows(); }

  ComplexMatrix t11, t12, t21, t22;
};

// Splits an even-dimension square matrix into its four blocks; throws
// OddDimension otherwise.
Block2x2 partition(const ComplexMatrix& m);
ComplexMatrix assemble(const Block2x2& b);

// Blocks of the Cartesian decomposition of the assembled matrix: T = A + iB
// with A = (T + T*)/2 and B = (T - T*)/(2i). Both are Hermitian, so
// a21 = a12* and b21 = b12* and the diagonal blocks are Hermitian.
struct CartesianBlocks {
  ComplexMatrix a11, a12, a21, a22;
  ComplexMatrix b11, b12, b21, b22;
};

CartesianBlocks cartesian(const Block2x2& b);

// Spectral classification. min_real_eig / min_imag_eig are the smallest
// eigenvalues of Re(m) and Im(m): the signed slacks of accretivity and
// dissipativity (nonnegative up to tolerance means the property holds).
struct OperatorClass {
  bool hermitian = false;
  bool positive = false;
  bool accretive = false;
  bool dissipative = false;
  bool accretive_dissipative = false;
  double min_real_eig = 0.0;
  double min_imag_eig = 0.0;
};

OperatorClass classify(const ComplexMatrix& m, double tol = tols::check);

// [[t*T11, T12], [T21, T22/t]] for t > 0; positivity of the assembled matrix
// is preserved. Throws NonpositiveScale when t <= 0 or non-finite.
Block2x2 congruence_scale(const Block2x2& m, double t);

// A sampled violation of |<Cx, y>|^2 <= <Ay, y> <Bx, x>, the Cauchy-Schwarz
// bound that holds exactly when [[A, C], [C*, B]] is psd.
struct CsWitness {
  std::vector<cplx> x, y;
  double slack;  // |<Cx,y>|^2 - <Ay,y><Bx,x>, positive by construction
};

// Samples `trials` seeded unit-sphere pairs and returns the first violation
// exceeding tols::witness_margin, or nullopt. a and b must be Hermitian psd
// within tolerance (throws NotPSDInput); c must satisfy
// rows(c) == dim(a), cols(c) == dim(b).
std::optional<CsWitness> cauchy_schwarz_witness(const ComplexMatrix& a, const ComplexMatrix& b,
                                                const ComplexMatrix& c, std::size_t trials,
                                                std::uint64_t seed);

}  // namespace omlab
