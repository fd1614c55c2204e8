#include <cmath>
#include <limits>

#include "doctest.h"
#include "omlab/complex_matrix.hpp"
#include "oracles.hpp"

using namespace omlab;

TEST_CASE("construction rejects degenerate and non-finite input") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 0), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {cplx{1, 0}, cplx{0, 0}}), DimensionError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(
      ComplexMatrix(1, 2, {cplx{inf, 0}, cplx{0, 0}}), NotFinite);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{cplx{std::nan(""), 0}}}), NotFinite);
}

TEST_CASE("arithmetic matches entrywise and matmul oracles") {
  auto rng = oracle::make_rng(101);
  const ComplexMatrix a = oracle::random_matrix(rng, 3, 4);
  const ComplexMatrix b = oracle::random_matrix(rng, 4, 2);
  const ComplexMatrix c = a * b;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      cplx s{0, 0};
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      CHECK(std::abs(c(i, j) - s) < 1e-14);
    }
  }
  const ComplexMatrix d = oracle::random_matrix(rng, 3, 4);
  const ComplexMatrix sum = a + d;
  const ComplexMatrix scaled = cplx{0, 2} * a;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(sum(i, j) == a(i, j) + d(i, j));
      CHECK(scaled(i, j) == cplx{0, 2} * a(i, j));
    }
  }
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(b * a, DimensionError);
}

TEST_CASE("adjoint is a Frobenius isometry and an involution") {
  auto rng = oracle::make_rng(7);
  const ComplexMatrix m = oracle::random_matrix(rng, 5, 3);
  const ComplexMatrix ma = adjoint(m);
  REQUIRE(ma.rows() == 3);
  REQUIRE(ma.cols() == 5);
  CHECK(frobenius_norm(ma) == doctest::Approx(frobenius_norm(m)).epsilon(1e-14));
  CHECK(frobenius_norm(adjoint(ma) - m) == 0.0);
  // <a x, y> = <x, a* y> on a sampled pair
  const auto x = oracle::random_unit(rng, 3);
  const auto y = oracle::random_unit(rng, 5);
  const cplx lhs = oracle::dot(oracle::matvec(m, x), y);
  const cplx rhs = oracle::dot(x, oracle::matvec(ma, y));
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("cartesian parts recompose the matrix and are Hermitian") {
  auto rng = oracle::make_rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = oracle::random_matrix(rng, 4, 4);
    const ComplexMatrix re = hermitian_part(m);
    const ComplexMatrix im = skew_part_over_i(m);
    CHECK(is_hermitian(re, 1e-14));
    CHECK(is_hermitian(im, 1e-14));
    const ComplexMatrix back = re + cplx{0, 1} * im;
    CHECK(frobenius_norm(back - m) <= 1e-14 * (1.0 + frobenius_norm(m)));
  }
}

TEST_CASE("hermitian test uses a relative threshold") {
  ComplexMatrix m = ComplexMatrix::from_rows({{cplx{1, 0}, cplx{0, 1e-9}},
                                              {cplx{0, 1e-9}, cplx{2, 0}}});
  // m - m* has mass ~2e-9: hermitian at 1e-8 scale, not at 1e-12
  CHECK(is_hermitian(m, 1e-8));
  CHECK(!is_hermitian(m, 1e-12));
}
