#include <benchmark/benchmark.h>

#include <memory>

#include "maxsurf/families.hpp"
#include "maxsurf/singular.hpp"
#include "maxsurf/surface.hpp"

static std::unique_ptr<maxsurf::Surface> entry_surface(const char* name) {
  return maxsurf::build_entry(*maxsurf::find_entry(name));
}

static void BM_evaluate_snsn(benchmark::State& state) {
  const auto s = entry_surface("snsn");
  const double tx = *s->periods().first;
  double x = 0.3;
  for (auto _ : state) {
    x += 0.1;
    if (x > tx) x -= tx;
    benchmark::DoNotOptimize(s->evaluate(x, 0.7));
  }
}

static void BM_evaluate_catenoid(benchmark::State& state) {
  const auto s = entry_surface("catenoid");
  double x = 0.3;
  for (auto _ : state) {
    x += 0.1;
    if (x > 2.0) x -= 2.0;
    benchmark::DoNotOptimize(s->evaluate(x, 0.7));
  }
}

static void BM_pde_residual(benchmark::State& state) {
  const auto s = entry_surface("snsn");
  for (auto _ : state) {
    benchmark::DoNotOptimize(s->pde_residual_implicit(0.7, 1.1));
  }
}

static void BM_sample_grid(benchmark::State& state) {
  const auto s = entry_surface("snsn");
  const double tx = *s->periods().first;
  const double ty = *s->periods().second;
  const int n = static_cast<int>(state.range(0));
  const maxsurf::GridSpec spec{0.07, 0.07 + tx, n, 0.05, 0.05 + ty, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxsurf::sample_grid(*s, spec));
  }
}

static void BM_find_special_points(benchmark::State& state) {
  const auto s = entry_surface("snsn");
  const auto* imp = dynamic_cast<const maxsurf::ImplicitSurface*>(s.get());
  const double tx = *s->periods().first;
  const double ty = *s->periods().second;
  const maxsurf::Window w{-tx / 8.0, 7.0 * tx / 8.0, -ty / 8.0,
                          7.0 * ty / 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxsurf::find_special_points(*imp, w));
  }
}

BENCHMARK(BM_evaluate_snsn);
BENCHMARK(BM_evaluate_catenoid);
BENCHMARK(BM_pde_residual);
BENCHMARK(BM_sample_grid)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_find_special_points)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
