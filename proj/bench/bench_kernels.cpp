#include <benchmark/benchmark.h>

#include "extk/grid_eval.hpp"
#include "extk/numcheck.hpp"

namespace {

const extk::GermSpec kGeneric = extk::make_generic({1.0, 0.0}, 1.0);
const extk::GermSpec kExceptional =
    extk::make_exceptional({1.0, 2.0 / 3.0}, 2.0, 1.0);

void bench_verify(benchmark::State& state, const extk::GermSpec& spec,
                  bool parallel) {
  const double radius = 0.5 * extk::domain_radius(spec);
  extk::VerifyOptions opts;
  opts.n_points = static_cast<int>(state.range(0));
  opts.parallel = parallel;
  for (auto _ : state) {
    auto report = extk::verify(spec, radius, opts);
    benchmark::DoNotOptimize(report.max_holomorphy_residual);
  }
}

void verify_generic_serial(benchmark::State& s) {
  bench_verify(s, kGeneric, false);
}
void verify_generic_omp(benchmark::State& s) { bench_verify(s, kGeneric, true); }
void verify_exceptional_serial(benchmark::State& s) {
  bench_verify(s, kExceptional, false);
}
void verify_exceptional_omp(benchmark::State& s) {
  bench_verify(s, kExceptional, true);
}

void bench_grid(benchmark::State& state, bool parallel) {
  const extk::GermEvaluator ev(kGeneric);
  const double radius = 0.5 * ev.domain_radius();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto grid = extk::evaluate_square_grid(ev, radius, n, parallel);
    benchmark::DoNotOptimize(grid.K.data());
  }
}

void grid_serial(benchmark::State& s) { bench_grid(s, false); }
void grid_omp(benchmark::State& s) { bench_grid(s, true); }

}  // namespace

BENCHMARK(verify_generic_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_generic_omp)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_exceptional_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_exceptional_omp)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_omp)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
