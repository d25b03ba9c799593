#include <benchmark/benchmark.h>

#include "mre/bounds.hpp"
#include "mre/eig.hpp"
#include "mre/mixed_opt.hpp"
#include "mre/multi_rdm.hpp"
#include "mre/pair_rdm.hpp"
#include "mre/random.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace {

mre::StateVector ghz(int n) {
  std::vector<mre::Complex> amps(std::size_t{1} << n, mre::Complex{});
  amps.front() = 1.0 / std::sqrt(2.0);
  amps.back() = 1.0 / std::sqrt(2.0);
  return mre::StateVector(n, std::move(amps));
}

mre::ComplexMatrix random_hermitian(std::size_t dim, mre::Rng& rng) {
  mre::ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = rng.complex_gaussian();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_EigHermitian(benchmark::State& state) {
  mre::Rng rng(1);
  const mre::ComplexMatrix m = random_hermitian(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::eig_hermitian(m));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_PartialTrace(benchmark::State& state) {
  mre::Rng rng(2);
  const mre::DensityMatrix rho = mre::random_density(5, 8, rng);
  const std::vector<int> keep{0, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::partial_trace(rho.matrix(), keep));
  }
}
BENCHMARK(BM_PartialTrace);

void BM_PairMeasure(benchmark::State& state) {
  mre::Rng rng(3);
  const mre::StateVector psi = mre::random_state(2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::mre_pair_pure(psi));
  }
}
BENCHMARK(BM_PairMeasure);

void BM_RelativeDensityN(benchmark::State& state) {
  mre::Rng rng(4);
  const mre::StateVector psi = mre::random_state(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::relative_density_n(psi));
  }
}
BENCHMARK(BM_RelativeDensityN)->Arg(3)->Arg(4)->Arg(5);

void BM_PureMeasure3(benchmark::State& state) {
  const mre::StateVector psi = ghz(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::mre_pure(psi).mre);
  }
}
BENCHMARK(BM_PureMeasure3);

void BM_AssistantBound3(benchmark::State& state) {
  mre::Rng rng(5);
  const mre::StateVector psi = mre::random_state(3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::assistant_air(psi).e_air);
  }
}
BENCHMARK(BM_AssistantBound3);

void BM_MixedMeasure(benchmark::State& state) {
  mre::Rng rng(6);
  const mre::DensityMatrix rho = mre::random_density(2, 2, rng);
  mre::OptimizerConfig config;
  config.restarts = 2;
  config.max_iters = 60;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mre::mre_mixed(rho, config).value);
  }
}
BENCHMARK(BM_MixedMeasure);

}  // namespace

BENCHMARK_MAIN();
