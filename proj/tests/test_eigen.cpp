#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "omlab/eigen.hpp"
#include "oracles.hpp"

using namespace omlab;

namespace {

// ||v* v - I||_F
double unitarity_defect(const ComplexMatrix& v) {
  return frobenius_norm(adjoint(v) * v - ComplexMatrix::identity(v.rows()));
}

double reconstruction_defect(const ComplexMatrix& m, const EigenDecomposition& e) {
  ComplexMatrix w = e.vectors;
  for (std::size_t j = 0; j < w.cols(); ++j) {
    for (std::size_t i = 0; i < w.rows(); ++i) w(i, j) *= e.values[j];
  }
  return frobenius_norm(w * adjoint(e.vectors) - m);
}

}  // namespace

TEST_CASE("fixed 2x2: [[2,1],[1,2]] has eigenvalues {3,1}") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{cplx{2, 0}, cplx{1, 0}},
                                                    {cplx{1, 0}, cplx{2, 0}}});
  const auto vals = hermitian_eigenvalues(m);
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("2x2 eigenvalues match the characteristic polynomial") {
  auto rng = oracle::make_rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix m = oracle::random_hermitian(rng, 2, 3.0);
    const auto [hi, lo] = oracle::eig2_hermitian(m);
    const auto vals = hermitian_eigenvalues(m);
    const double scale = 1.0 + std::abs(hi) + std::abs(lo);
    CHECK(std::abs(vals[0] - hi) <= 1e-12 * scale);
    CHECK(std::abs(vals[1] - lo) <= 1e-12 * scale);
  }
}

TEST_CASE("reconstruction and unitarity invariants up to dimension 16") {
  auto rng = oracle::make_rng(57);
  for (std::size_t n : {1, 2, 3, 5, 8, 16}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = oracle::random_hermitian(rng, n, 2.0);
      const EigenDecomposition e = hermitian_eigen(m);
      REQUIRE(e.values.size() == n);
      CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
      const double scale = 1.0 + frobenius_norm(m);
      CHECK(unitarity_defect(e.vectors) <= 1e-10 * scale);
      CHECK(reconstruction_defect(m, e) <= 1e-10 * scale);
      // values-only path agrees with the full decomposition
      const auto vals = hermitian_eigenvalues(m);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(vals[i] - e.values[i]) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("eigen input validation") {
  const ComplexMatrix nonsquare(2, 3);
  CHECK_THROWS_AS(hermitian_eigen(nonsquare), DimensionError);
  const ComplexMatrix skew = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{1, 0}},
                                                       {cplx{-1, 0}, cplx{0, 0}}});
  CHECK_THROWS_AS(hermitian_eigen(skew), NotHermitian);
}

TEST_CASE("operator norm: fixed values and power-iteration oracle") {
  const ComplexMatrix nil = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{1, 0}},
                                                      {cplx{0, 0}, cplx{0, 0}}});
  CHECK(operator_norm(nil) == doctest::Approx(1.0).epsilon(1e-12));

  const ComplexMatrix k = ComplexMatrix::from_rows({{cplx{1, 1}, cplx{1, -1}},
                                                    {cplx{1, -1}, cplx{1, 1}}});
  CHECK(operator_norm(k) == doctest::Approx(2.0).epsilon(1e-12));

  auto rng = oracle::make_rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix m = oracle::random_matrix(rng, 4, 3, 2.0);
    const double direct = operator_norm(m);
    const double po = oracle::power_norm(m, rng);
    CHECK(direct >= po - 1e-8 * (1.0 + direct));     // power norm is a lower bound
    CHECK(po >= 0.9 * direct);                        // and converges close
    // consistency: ||m x|| <= ||m|| on sampled unit vectors
    const auto x = oracle::random_unit(rng, 3);
    CHECK(oracle::norm2(oracle::matvec(m, x)) <= direct + 1e-10);
  }
}

TEST_CASE("matrix_abs and spectral square root: fixed witnesses") {
  const ComplexMatrix nil = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{1, 0}},
                                                      {cplx{0, 0}, cplx{0, 0}}});
  const ComplexMatrix a = matrix_abs(nil);  // diag(0, 1)
  CHECK(std::abs(a(0, 0)) <= 1e-12);
  CHECK(std::abs(a(1, 1) - cplx{1, 0}) <= 1e-12);
  CHECK(std::abs(a(0, 1)) <= 1e-12);

  const ComplexMatrix ones = ComplexMatrix::from_rows({{cplx{1, 0}, cplx{1, 0}},
                                                       {cplx{1, 0}, cplx{1, 0}}});
  const ComplexMatrix root = spectral_function(ones, [](double x) { return std::sqrt(x); });
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(root(i, j) - cplx{inv_sqrt2, 0}) <= 1e-12);
    }
  }
  // squared recovery
  CHECK(frobenius_norm(root * root - ones) <= 1e-10);
}

TEST_CASE("matrix_abs squared recovery on random matrices") {
  auto rng = oracle::make_rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = oracle::random_matrix(rng, 3, 3, 2.0);
    const ComplexMatrix a = matrix_abs(m);
    CHECK(is_hermitian(a, 1e-12));
    CHECK(hermitian_eigenvalues(a).back() >= -1e-10);
    const double scale = 1.0 + frobenius_norm(adjoint(m) * m);
    CHECK(frobenius_norm(a * a - adjoint(m) * m) <= 1e-8 * scale);
  }
}

TEST_CASE("spectral_function guards its domain") {
  const ComplexMatrix neg = ComplexMatrix::from_rows({{cplx{-1, 0}}});
  CHECK_THROWS_AS(spectral_function(neg, [](double x) { return std::sqrt(x); }),
                  NegativeSpectrum);
  // tiny negative eigenvalues within psd slack are clamped, not fatal
  const ComplexMatrix dust = ComplexMatrix::from_rows({{cplx{-1e-12, 0}}});
  const ComplexMatrix r = spectral_function(dust, [](double x) { return std::sqrt(x); });
  CHECK(std::abs(r(0, 0)) <= 1e-6);
  CHECK_THROWS_AS(spectral_function(ComplexMatrix::identity(2),
                                    [](double) { return std::nan(""); }),
                  NotFinite);
}

TEST_CASE("psd_projection clamps the negative part only") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{cplx{1, 0}, cplx{0, 0}},
                                                    {cplx{0, 0}, cplx{-2, 0}}});
  const ComplexMatrix p = psd_projection(m);
  CHECK(std::abs(p(0, 0) - cplx{1, 0}) <= 1e-12);
  CHECK(std::abs(p(1, 1)) <= 1e-12);
  auto rng = oracle::make_rng(13);
  const ComplexMatrix h = oracle::random_hermitian(rng, 4, 2.0);
  const auto vals = hermitian_eigenvalues(psd_projection(h));
  CHECK(vals.back() >= -1e-12);
}
