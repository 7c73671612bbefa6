// Microbenchmarks for the two assembly kernels, comparing the OpenMP
// implementation against the serial reference it must match bit for bit.
//
//   cmake --build build --target colloc_bench && ./build/colloc_bench

#include <benchmark/benchmark.h>

#include "colloc/assemble.hpp"
#include "colloc/solver.hpp"

namespace {

void bench_sample_matrices(benchmark::State& state, colloc::Exec exec) {
  colloc::Grid g = colloc::make_grid((int)state.range(0));
  colloc::SplineBasis b = colloc::make_basis(g);
  for (auto _ : state) {
    colloc::SampleMatrices sm = colloc::build_sample_matrices(g, b, exec);
    benchmark::DoNotOptimize(sm.S.a.data());
    benchmark::DoNotOptimize(sm.T.a.data());
  }
}

void bench_build_system(benchmark::State& state, colloc::Exec exec) {
  colloc::Problem p = colloc::builtin_examples()[0];
  colloc::Grid g = colloc::make_grid((int)state.range(0));
  colloc::SplineBasis b = colloc::make_basis(g);
  colloc::SampleMatrices sm = colloc::build_sample_matrices(g, b, exec);
  colloc::SampledPair f = colloc::sample_expression(g, p.f);
  for (auto _ : state) {
    colloc::NormalSystem sys = colloc::build_system(g, sm, f, exec);
    benchmark::DoNotOptimize(sys.A.a.data());
    benchmark::DoNotOptimize(sys.rhs.data());
  }
}

void BM_sample_matrices_serial(benchmark::State& state) {
  bench_sample_matrices(state, colloc::Exec::Serial);
}
void BM_sample_matrices_parallel(benchmark::State& state) {
  bench_sample_matrices(state, colloc::Exec::Parallel);
}
void BM_build_system_serial(benchmark::State& state) {
  bench_build_system(state, colloc::Exec::Serial);
}
void BM_build_system_parallel(benchmark::State& state) {
  bench_build_system(state, colloc::Exec::Parallel);
}

BENCHMARK(BM_sample_matrices_serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_sample_matrices_parallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_build_system_serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_build_system_parallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
