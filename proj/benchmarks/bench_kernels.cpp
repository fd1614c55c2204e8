#include <benchmark/benchmark.h>

#include "omlab/block.hpp"
#include "omlab/catalog.hpp"
#include "omlab/eigen.hpp"
#include "omlab/radius.hpp"
#include "omlab/sampling.hpp"
#include "omlab/sweep.hpp"

namespace {

using namespace omlab;

ComplexMatrix fixture(SampleClass klass, std::size_t dim, std::uint64_t seed) {
  return sample({klass, dim / 2, 1.0, seed});
}

void BM_hermitian_eigenvalues(benchmark::State& state) {
  const ComplexMatrix m =
      fixture(SampleClass::hermitian, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(m));
}
BENCHMARK(BM_hermitian_eigenvalues)->Arg(4)->Arg(8)->Arg(16);

void BM_hermitian_eigen_vectors(benchmark::State& state) {
  const ComplexMatrix m =
      fixture(SampleClass::hermitian, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_hermitian_eigen_vectors)->Arg(4)->Arg(8)->Arg(16);

void BM_operator_norm(benchmark::State& state) {
  const ComplexMatrix m =
      fixture(SampleClass::ginibre, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(BM_operator_norm)->Arg(4)->Arg(8)->Arg(16);

void BM_numerical_radius(benchmark::State& state) {
  const ComplexMatrix m =
      fixture(SampleClass::ginibre, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(m));
}
BENCHMARK(BM_numerical_radius)->Arg(2)->Arg(4)->Arg(8);

void BM_classify(benchmark::State& state) {
  const ComplexMatrix m =
      fixture(SampleClass::accretive_dissipative, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_classify)->Arg(4)->Arg(8);

void BM_sample_class(benchmark::State& state) {
  const auto klass = static_cast<SampleClass>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample({klass, 4, 1.0, seed++}));
}
BENCHMARK(BM_sample_class)
    ->Arg(static_cast<int>(SampleClass::ginibre))
    ->Arg(static_cast<int>(SampleClass::psd))
    ->Arg(static_cast<int>(SampleClass::normal))
    ->Arg(static_cast<int>(SampleClass::square_zero));

// one full sweep trial: sample, partition, evaluate the whole catalog
void BM_catalog_trial(benchmark::State& state) {
  std::uint64_t seed = 0;
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CheckContext ctx(partition(sample({SampleClass::ginibre, n, 1.0, seed++})));
    benchmark::DoNotOptimize(run_catalog(ctx));
  }
}
BENCHMARK(BM_catalog_trial)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
