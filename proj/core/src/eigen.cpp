#include "omlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "omlab/constants.hpp"
#include "omlab/errors.hpp"
#include "jacobi_kernel.hpp"

namespace omlab {

namespace detail {

double off_diagonal_mass(const cplx* a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a[i * n + j]);
    }
  }
  return std::sqrt(sum);
}

double jacobi_threshold(double frobenius) {
  return tols::eigen_converge * (1.0 + frobenius);
}

namespace {

// One unitary rotation zeroing the (p,q) entry. a is exactly Hermitian with a
// real diagonal on entry and stays that way: rotations touch rows/cols p and q
// only, and the 2x2 core is overwritten with its exact post-rotation values.
void rotate(cplx* a, std::size_t n, cplx* v, std::size_t p, std::size_t q) {
  const cplx apq = a[p * n + q];
  const double beta = std::abs(apq);
  const double alpha = a[p * n + p].real();
  const double gamma = a[q * n + q].real();
  const cplx phase = apq / beta;  // e^{i arg(a_pq)}
  const double tau = (gamma - alpha) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on coordinates (p, q); a <- J* a J.
  const cplx cp = c * std::conj(phase);
  const cplx sp = s * std::conj(phase);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx aip = a[i * n + p];
    const cplx aiq = a[i * n + q];
    a[i * n + p] = c * aip - sp * aiq;
    a[i * n + q] = s * aip + cp * aiq;
  }
  const cplx cl = c * phase;
  const cplx sl = s * phase;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx apj = a[p * n + j];
    const cplx aqj = a[q * n + j];
    a[p * n + j] = c * apj - sl * aqj;
    a[q * n + j] = s * apj + cl * aqj;
  }
  a[p * n + p] = alpha - t * beta;
  a[q * n + q] = gamma + t * beta;
  a[p * n + q] = cplx{0.0, 0.0};
  a[q * n + p] = cplx{0.0, 0.0};

  if (v != nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vip = v[i * n + p];
      const cplx viq = v[i * n + q];
      v[i * n + p] = c * vip - sp * viq;
      v[i * n + q] = s * vip + cp * viq;
    }
  }
}

}  // namespace

bool jacobi_inplace(cplx* a, std::size_t n, cplx* v, double conv_tol) {
  if (n == 1) {
    a[0] = cplx{a[0].real(), 0.0};
    return true;
  }
  // Entries this small cannot keep the off-diagonal mass above conv_tol.
  const double skip = conv_tol / (8.0 * static_cast<double>(n));
  for (int sweep = 0; sweep < tols::max_jacobi_sweeps; ++sweep) {
    if (off_diagonal_mass(a, n) <= conv_tol) return true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p * n + q]) > skip) rotate(a, n, v, p, q);
      }
    }
  }
  return off_diagonal_mass(a, n) <= conv_tol;
}

}  // namespace detail

namespace {

// Exactly Hermitian working copy: offdiagonal pairs averaged, diagonal realified.
std::vector<cplx> hermitian_copy(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = cplx{m(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a[i * n + j] = z;
      a[j * n + i] = std::conj(z);
    }
  }
  return a;
}

void require_hermitian_input(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + " requires a square matrix");
  }
  if (!is_hermitian(m, tols::kernel)) {
    throw NotHermitian(std::string(op) + ": input is not Hermitian within tolerance");
  }
}

std::vector<std::size_t> descending_order(const std::vector<double>& vals) {
  std::vector<std::size_t> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  return idx;
}

ComplexMatrix rebuild(const EigenDecomposition& e, const std::vector<double>& d) {
  const std::size_t n = e.vectors.rows();
  // V diag(d) V*, then exact re-hermitization to shed rounding drift.
  ComplexMatrix w = e.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) w(i, j) *= d[j];
  }
  ComplexMatrix out = w * adjoint(e.vectors);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = cplx{out(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  require_hermitian_input(m, "hermitian_eigen");
  const std::size_t n = m.rows();
  std::vector<cplx> a = hermitian_copy(m);
  std::vector<cplx> v(n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double conv = detail::jacobi_threshold(frobenius_norm(m));
  if (!detail::jacobi_inplace(a.data(), n, v.data(), conv)) {
    throw NoConvergence("hermitian_eigen: Jacobi sweeps did not converge in " +
                        std::to_string(tols::max_jacobi_sweeps) + " sweeps");
  }

  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = a[i * n + i].real();
  const auto order = descending_order(raw);

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = raw[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i * n + order[k]];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian_input(m, "hermitian_eigenvalues");
  const std::size_t n = m.rows();
  std::vector<cplx> a = hermitian_copy(m);
  const double conv = detail::jacobi_threshold(frobenius_norm(m));
  if (!detail::jacobi_inplace(a.data(), n, nullptr, conv)) {
    throw NoConvergence("hermitian_eigenvalues: Jacobi sweeps did not converge in " +
                        std::to_string(tols::max_jacobi_sweeps) + " sweeps");
  }
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a[i * n + i].real();
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

double operator_norm(const ComplexMatrix& m) {
  // Gram matrix m* m, built directly; exactly Hermitian with a real diagonal.
  const std::size_t n = m.cols();
  ComplexMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      cplx sum{0.0, 0.0};
      for (std::size_t i = 0; i < m.rows(); ++i) sum += std::conj(m(i, j)) * m(i, k);
      b(j, k) = (j == k) ? cplx{sum.real(), 0.0} : sum;
      b(k, j) = std::conj(b(j, k));
    }
  }
  const std::vector<double> vals = hermitian_eigenvalues(b);
  return std::sqrt(std::max(vals.front(), 0.0));
}

ComplexMatrix matrix_abs(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("matrix_abs requires a square matrix");
  const EigenDecomposition e = hermitian_eigen(adjoint(m) * m);
  std::vector<double> d(e.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::sqrt(std::max(e.values[i], 0.0));
  return rebuild(e, d);
}

ComplexMatrix psd_projection(const ComplexMatrix& m) {
  const EigenDecomposition e = hermitian_eigen(hermitian_part(m));
  std::vector<double> d(e.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max(e.values[i], 0.0);
  return rebuild(e, d);
}

ComplexMatrix spectral_function(const ComplexMatrix& m, const RealFunction& f) {
  const EigenDecomposition e = hermitian_eigen(m);
  const double scale =
      std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  const double floor = -tols::psd_slack * (1.0 + scale);
  std::vector<double> d(e.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (e.values[i] < floor) {
      throw NegativeSpectrum("spectral_function: eigenvalue " + std::to_string(e.values[i]) +
                             " below psd tolerance");
    }
    d[i] = f(std::max(e.values[i], 0.0));
    if (!std::isfinite(d[i])) {
      throw NotFinite("spectral_function: f produced a non-finite value");
    }
  }
  return rebuild(e, d);
}

}  // namespace omlab
