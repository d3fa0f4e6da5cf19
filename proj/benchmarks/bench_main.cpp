#include <benchmark/benchmark.h>

#include "symcone/symcone.hpp"

namespace {

using namespace symcone;

AlgebraPtr algebra_for(int index) {
  switch (index) {
    case 0: return make_algebra(AlgebraKind::SymReal, 3);
    case 1: return make_algebra(AlgebraKind::HermComplex, 3);
    case 2: return make_algebra(AlgebraKind::HermQuaternion, 3);
    default: return make_algebra(AlgebraKind::Albert, 3);
  }
}

void BM_BuildPsi(benchmark::State& state) {
  const auto alg = algebra_for(static_cast<int>(state.range(0)));
  state.SetLabel(std::string(short_name(alg->kind())));
  for (auto _ : state) benchmark::DoNotOptimize(build_psi(alg));
}
BENCHMARK(BM_BuildPsi)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SpectralSplit(benchmark::State& state) {
  const auto psi = build_psi(algebra_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_split(psi));
}
BENCHMARK(BM_SpectralSplit)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// Fractional shape forces the Bartlett path; 1.5 on SymReal r = 3 is rank-one.
void BM_Sample(benchmark::State& state) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 3);
  const WishartParams params(state.range(0) == 0 ? 1.5 : 1.37, alg->identity());
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample(params, 10000, seed++, {4096, 1}));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Sample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CumulantHessian(benchmark::State& state) {
  const auto alg = make_algebra(AlgebraKind::HermComplex, static_cast<int>(state.range(0)));
  const CumulantEvaluator kappa(WishartParams(4.0, alg->identity()));
  const Element theta = alg->identity() * 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(kappa.hessian(theta));
}
BENCHMARK(BM_CumulantHessian)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
