#include "omlab/block.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "omlab/eigen.hpp"
#include "omlab/errors.hpp"
#include "omlab/rng.hpp"

namespace omlab {

namespace {

ComplexMatrix copy_block(const ComplexMatrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(r0 + i, c0 + j);
  }
  return out;
}

void paste_block(ComplexMatrix& m, const ComplexMatrix& b, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
  }
}

void require_psd(const ComplexMatrix& m, const char* name) {
  if (!m.is_square() || !is_hermitian(m, tols::kernel)) {
    throw NotPSDInput(std::string("cauchy_schwarz_witness: ") + name + " is not Hermitian");
  }
  const auto vals = hermitian_eigenvalues(m);
  const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
  if (vals.back() < -tols::psd_slack * (1.0 + scale)) {
    throw NotPSDInput(std::string("cauchy_schwarz_witness: ") + name +
                      " has eigenvalue " + std::to_string(vals.back()));
  }
}

// <Mv, v> for Hermitian M; the imaginary residue is rounding only.
double quad_form(const ComplexMatrix& m, const std::vector<cplx>& v) {
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
    sum += row * std::conj(v[i]);
  }
  return sum.real();
}

}  // namespace

Block2x2::Block2x2(ComplexMatrix m11, ComplexMatrix m12, ComplexMatrix m21, ComplexMatrix m22)
    : t11(std::move(m11)), t12(std::move(m12)), t21(std::move(m21)), t22(std::move(m22)) {
  const std::size_t n = t11.rows();
  for (const ComplexMatrix* m : {&t11, &t12, &t21, &t22}) {
    if (!m->is_square() || m->rows() != n) {
      throw DimensionError("Block2x2 requires four square blocks of equal dimension");
    }
  }
}

Block2x2 partition(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("partition requires a square matrix");
  if (m.rows() % 2 != 0) {
    throw OddDimension("partition: dimension " + std::to_string(m.rows()) + " is odd");
  }
  const std::size_t n = m.rows() / 2;
  return Block2x2(copy_block(m, 0, 0, n), copy_block(m, 0, n, n), copy_block(m, n, 0, n),
                  copy_block(m, n, n, n));
}

ComplexMatrix assemble(const Block2x2& b) {
  const std::size_t n = b.block_dim();
  ComplexMatrix m(2 * n, 2 * n);
  paste_block(m, b.t11, 0, 0);
  paste_block(m, b.t12, 0, n);
  paste_block(m, b.t21, n, 0);
  paste_block(m, b.t22, n, n);
  return m;
}

CartesianBlocks cartesian(const Block2x2& b) {
  const ComplexMatrix t = assemble(b);
  const Block2x2 a = partition(hermitian_part(t));
  const Block2x2 bb = partition(skew_part_over_i(t));
  return CartesianBlocks{a.t11, a.t12, a.t21, a.t22, bb.t11, bb.t12, bb.t21, bb.t22};
}

OperatorClass classify(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("classify requires a square matrix");
  OperatorClass out;
  out.hermitian = is_hermitian(m, tols::kernel);

  const double scale = operator_norm(m);
  const double floor = -tol * (1.0 + scale);

  const auto re_vals = hermitian_eigenvalues(hermitian_part(m));
  const auto im_vals = hermitian_eigenvalues(skew_part_over_i(m));
  out.min_real_eig = re_vals.back();
  out.min_imag_eig = im_vals.back();

  out.accretive = out.min_real_eig >= floor;
  out.dissipative = out.min_imag_eig >= floor;
  out.accretive_dissipative = out.accretive && out.dissipative;
  out.positive = out.hermitian && out.accretive;
  return out;
}

Block2x2 congruence_scale(const Block2x2& m, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw NonpositiveScale("congruence_scale: t = " + std::to_string(t) + " must be positive");
  }
  return Block2x2(cplx{t, 0.0} * m.t11, m.t12, m.t21, cplx{1.0 / t, 0.0} * m.t22);
}

std::optional<CsWitness> cauchy_schwarz_witness(const ComplexMatrix& a, const ComplexMatrix& b,
                                                const ComplexMatrix& c, std::size_t trials,
                                                std::uint64_t seed) {
  require_psd(a, "a");
  require_psd(b, "b");
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw DimensionError("cauchy_schwarz_witness: c must be dim(a) x dim(b)");
  }

  Rng rng(mix64(seed));
  for (std::size_t k = 0; k < trials; ++k) {
    const std::vector<cplx> x = rng.unit_vector(c.cols());
    const std::vector<cplx> y = rng.unit_vector(c.rows());
    // <Cx, y> = y* (C x)
    cplx inner{0.0, 0.0};
    for (std::size_t i = 0; i < c.rows(); ++i) {
      cplx row{0.0, 0.0};
      for (std::size_t j = 0; j < c.cols(); ++j) row += c(i, j) * x[j];
      inner += row * std::conj(y[i]);
    }
    const double lhs = std::norm(inner);
    const double rhs = quad_form(a, y) * quad_form(b, x);
    if (lhs > rhs + tols::witness_margin) {
      return CsWitness{x, y, lhs - rhs};
    }
  }
  return std::nullopt;
}

}  // namespace omlab
