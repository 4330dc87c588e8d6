#include <benchmark/benchmark.h>

#include "qlnls/evolve.hpp"
#include "qlnls/fit.hpp"
#include "qlnls/groundstate.hpp"
#include "qlnls/spectral.hpp"

using namespace qlnls;

namespace {

ComplexField gs_field(int n, double scale, double lambda = 1.0) {
    auto grid = make_grid(n, scale);
    GroundState gs(ModelParams{9.0, 4.4, 1});
    cvector v(grid->n);
    for (int j = 0; j < grid->n; ++j) v[j] = lambda * gs.eval(grid->xs[j]);
    return ComplexField{std::move(v), std::move(grid)};
}

void BM_forward(benchmark::State& state) {
    auto f = gs_field(static_cast<int>(state.range(0)), 5.0);
    for (auto _ : state) benchmark::DoNotOptimize(forward(f));
}
BENCHMARK(BM_forward)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 13);

void BM_rhs(benchmark::State& state) {
    auto f = gs_field(static_cast<int>(state.range(0)), 5.0);
    const ModelParams p{9.0, 4.4, 1};
    for (auto _ : state) benchmark::DoNotOptimize(rhs(f, p));
}
BENCHMARK(BM_rhs)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 13);

void BM_rk4_step(benchmark::State& state) {
    auto f = gs_field(static_cast<int>(state.range(0)), 5.0);
    const ModelParams p{9.0, 4.4, 1};
    const double dt = 1e-6;
    for (auto _ : state) benchmark::DoNotOptimize(rk4_step(f, dt, p));
}
BENCHMARK(BM_rk4_step)->Arg(1 << 10)->Arg(1 << 13);

void BM_fit(benchmark::State& state) {
    auto f = gs_field(1 << 11, 5.0, 0.995);
    const ModelParams p{9.0, 4.4, 1};
    for (auto _ : state) benchmark::DoNotOptimize(fit_ground_state(f, p, 5.0, 4.0));
}
BENCHMARK(BM_fit);

void BM_groundstate_eval(benchmark::State& state) {
    GroundState gs(ModelParams{9.0, 4.4, 1});
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gs.eval(x));
        x += 1e-4;
        if (x > 10.0) x = -10.0;
    }
}
BENCHMARK(BM_groundstate_eval);

} // namespace

BENCHMARK_MAIN();
