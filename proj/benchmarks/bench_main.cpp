#include <benchmark/benchmark.h>

#include "pfh/bell.hpp"
#include "pfh/harmonic.hpp"
#include "pfh/pfd.hpp"
#include "pfh/sympoly.hpp"

namespace {

void BM_HarmonicRecompute(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::HarmonicCache::recompute(n, 2));
  }
}
BENCHMARK(BM_HarmonicRecompute)->Arg(25)->Arg(100);

void BM_OmegaCoeff(benchmark::State& state) {
  const unsigned ell = static_cast<unsigned>(state.range(0));
  pfh::harmonic_number(20, 6);  // warm the cache so the partition sum dominates
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::omega_coeff({5, 3, 10, 4, ell}));
  }
}
BENCHMARK(BM_OmegaCoeff)->DenseRange(2, 6);

void BM_OmegaSymbolicRecurrence(benchmark::State& state) {
  const unsigned ell = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::omega_symbolic(ell, pfh::OmegaMethod::kRecurrence));
  }
}
BENCHMARK(BM_OmegaSymbolicRecurrence)->DenseRange(3, 6);

void BM_TheoremDecompose(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::theorem_decompose(n, 4, 2));
  }
}
BENCHMARK(BM_TheoremDecompose)->Arg(4)->Arg(8);

void BM_OracleDecompose(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  pfh::FamilyParams params;
  params.family = pfh::Family::kTheorem;
  params.n = n;
  params.lambda = 4;
  params.mu = 2;
  const pfh::RationalFunctionSpec spec = pfh::build_family_spec(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::oracle_decompose(spec));
  }
}
BENCHMARK(BM_OracleDecompose)->Arg(3)->Arg(6);

void BM_VerifyEqual(benchmark::State& state) {
  pfh::FamilyParams params;
  params.family = pfh::Family::kTheorem;
  params.n = static_cast<unsigned>(state.range(0));
  params.lambda = 3;
  params.mu = 1;
  const pfh::RationalFunctionSpec spec = pfh::build_family_spec(params);
  const pfh::PFDResult pfd = pfh::theorem_decompose(params.n, params.lambda, params.mu);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfh::verify_equal(spec, pfd));
  }
}
BENCHMARK(BM_VerifyEqual)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
