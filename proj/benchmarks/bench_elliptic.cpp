#include <benchmark/benchmark.h>

#include "maxsurf/elliptic.hpp"

static void BM_complete_K(benchmark::State& state) {
  const maxsurf::Modulus m(0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxsurf::complete_K(m));
  }
}

static void BM_jacobi_sn_cn_dn(benchmark::State& state) {
  const maxsurf::Modulus m(0.8);
  const double period = 4.0 * maxsurf::complete_K(m);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.618;
    if (t > period) t -= period;
    benchmark::DoNotOptimize(maxsurf::jacobi_sn_cn_dn(t, m));
  }
}

static void BM_incomplete_F(benchmark::State& state) {
  const maxsurf::Modulus m(0.8);
  double s = 0.0;
  for (auto _ : state) {
    s = s > 0.9 ? 0.05 : s + 0.07;
    benchmark::DoNotOptimize(maxsurf::incomplete_F(s, m));
  }
}

BENCHMARK(BM_complete_K);
BENCHMARK(BM_jacobi_sn_cn_dn);
BENCHMARK(BM_incomplete_F);

BENCHMARK_MAIN();
