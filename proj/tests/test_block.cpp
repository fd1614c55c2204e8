#include <cmath>

#include "doctest.h"
#include "omlab/block.hpp"
#include "omlab/eigen.hpp"
#include "omlab/radius.hpp"
#include "omlab/sampling.hpp"
#include "oracles.hpp"

using namespace omlab;

namespace {

Block2x2 psd_block(std::uint64_t seed, std::size_t n) {
  return partition(sample({SampleClass::positive_block, n, 1.0, seed}));
}

}  // namespace

TEST_CASE("partition and assemble are mutually inverse; odd dimension rejected") {
  auto rng = oracle::make_rng(3);
  const ComplexMatrix m = oracle::random_matrix(rng, 6, 6);
  const Block2x2 b = partition(m);
  REQUIRE(b.block_dim() == 3);
  CHECK(frobenius_norm(assemble(b) - m) == 0.0);
  CHECK(b.t21(0, 0) == m(3, 0));
  CHECK(b.t12(2, 1) == m(2, 4));

  CHECK_THROWS_AS(partition(oracle::random_matrix(rng, 5, 5)), OddDimension);
  CHECK_THROWS_AS(partition(oracle::random_matrix(rng, 4, 6)), DimensionError);
  CHECK_THROWS_AS(Block2x2(ComplexMatrix(2, 2), ComplexMatrix(1, 1), ComplexMatrix(2, 2),
                           ComplexMatrix(2, 2)),
                  DimensionError);
}

TEST_CASE("cartesian blocks recompose and carry Hermitian symmetry") {
  auto rng = oracle::make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = oracle::random_matrix(rng, 4, 4, 2.0);
    const Block2x2 b = partition(m);
    const CartesianBlocks cb = cartesian(b);
    CHECK(is_hermitian(cb.a11, 1e-13));
    CHECK(is_hermitian(cb.a22, 1e-13));
    CHECK(is_hermitian(cb.b11, 1e-13));
    CHECK(is_hermitian(cb.b22, 1e-13));
    CHECK(frobenius_norm(cb.a21 - adjoint(cb.a12)) <= 1e-14);
    CHECK(frobenius_norm(cb.b21 - adjoint(cb.b12)) <= 1e-14);
    // A + iB reassembles to m blockwise
    CHECK(frobenius_norm(cb.a11 + cplx{0, 1} * cb.b11 - b.t11) <= 1e-13);
    CHECK(frobenius_norm(cb.a12 + cplx{0, 1} * cb.b12 - b.t12) <= 1e-13);
    // norm of the real part never exceeds the numerical radius
    const ComplexMatrix re = hermitian_part(m);
    CHECK(operator_norm(re) <= numerical_radius(m) + 1e-8 * (1.0 + operator_norm(re)));
  }
}

TEST_CASE("classify on fixed witnesses") {
  // circulant complex witness: normal, accretive and dissipative, not hermitian
  const ComplexMatrix k = ComplexMatrix::from_rows({{cplx{1, 1}, cplx{1, -1}},
                                                    {cplx{1, -1}, cplx{1, 1}}});
  const OperatorClass ck = classify(k);
  CHECK(!ck.hermitian);
  CHECK(!ck.positive);
  CHECK(ck.accretive);
  CHECK(ck.dissipative);
  CHECK(ck.accretive_dissipative);
  // Re(k) = [[1,1],[1,1]] and Im(k) = [[1,-1],[-1,1]] both have spectrum {2,0}
  CHECK(ck.min_real_eig == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(ck.min_imag_eig == doctest::Approx(0.0).epsilon(1e-10));

  const ComplexMatrix h = ComplexMatrix::from_rows({{cplx{2, 0}, cplx{1, 0}},
                                                    {cplx{1, 0}, cplx{2, 0}}});
  const OperatorClass ch = classify(h);
  CHECK(ch.hermitian);
  CHECK(ch.positive);
  CHECK(ch.min_real_eig == doctest::Approx(1.0).epsilon(1e-10));

  const ComplexMatrix neg = cplx{-1, 0} * h;
  const OperatorClass cn = classify(neg);
  CHECK(cn.hermitian);
  CHECK(!cn.positive);
  CHECK(cn.min_real_eig == doctest::Approx(-3.0).epsilon(1e-10));
}

TEST_CASE("congruence scaling: fixed example and positivity preservation") {
  const ComplexMatrix h = ComplexMatrix::from_rows({{cplx{2, 0}, cplx{1, 0}},
                                                    {cplx{1, 0}, cplx{2, 0}}});
  const Block2x2 scaled = congruence_scale(partition(h), 4.0);
  CHECK(scaled.t11(0, 0) == cplx{8, 0});
  CHECK(scaled.t12(0, 0) == cplx{1, 0});
  CHECK(scaled.t21(0, 0) == cplx{1, 0});
  CHECK(scaled.t22(0, 0) == cplx{0.5, 0});
  CHECK(classify(assemble(scaled)).positive);

  CHECK_THROWS_AS(congruence_scale(partition(h), 0.0), NonpositiveScale);
  CHECK_THROWS_AS(congruence_scale(partition(h), -2.0), NonpositiveScale);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Block2x2 b = psd_block(seed, 1 + seed % 3);
    const Block2x2 same = congruence_scale(b, 1.0);
    CHECK(frobenius_norm(assemble(same) - assemble(b)) == 0.0);
    for (double t : {0.1, 0.5, 2.0, 10.0}) {
      CHECK(classify(assemble(congruence_scale(b, t))).positive);
    }
  }
}

TEST_CASE("cauchy-schwarz witness: forward direction is silent on psd blocks") {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  CHECK(!cauchy_schwarz_witness(id, id, id, 200, 5).has_value());

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Block2x2 b = psd_block(seed, 1 + seed % 3);
    CHECK(!cauchy_schwarz_witness(b.t11, b.t22, b.t12, 1000, seed).has_value());
  }
}

TEST_CASE("cauchy-schwarz witness: violation found when the block is not psd") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cplx{1, 0}, cplx{0, 0}},
                                                    {cplx{0, 0}, cplx{0, 0}}});
  const ComplexMatrix bm = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{0, 0}},
                                                     {cplx{0, 0}, cplx{1, 0}}});
  const ComplexMatrix c = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{0, 0}},
                                                    {cplx{0, 0}, cplx{1, 0}}});
  // assembled [[A,C],[C*,B]] is not psd: <C e2, e2> = 1 while A e2 = 0
  REQUIRE(!classify(assemble(Block2x2(a, c, adjoint(c), bm))).positive);
  const auto w = cauchy_schwarz_witness(a, bm, c, 1000, 7);
  REQUIRE(w.has_value());
  CHECK(w->slack > 0.0);
  // the returned pair reproduces the violation
  const cplx cx_y = oracle::dot(oracle::matvec(c, w->x), w->y);
  const double lhs = std::norm(cx_y);
  const double rhs = oracle::dot(oracle::matvec(a, w->y), w->y).real() *
                     oracle::dot(oracle::matvec(bm, w->x), w->x).real();
  CHECK(lhs - rhs == doctest::Approx(w->slack).epsilon(1e-10));

  const ComplexMatrix nil = ComplexMatrix::from_rows({{cplx{0, 0}, cplx{1, 0}},
                                                      {cplx{0, 0}, cplx{0, 0}}});
  CHECK_THROWS_AS(cauchy_schwarz_witness(nil, bm, c, 10, 1), NotPSDInput);   // not Hermitian
  CHECK_THROWS_AS(cauchy_schwarz_witness(cplx{-1, 0} * ComplexMatrix::identity(2), bm, c, 10, 1),
                  NotPSDInput);
}
