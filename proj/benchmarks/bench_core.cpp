#include <benchmark/benchmark.h>

#include "hosc/hermite.hpp"
#include "hosc/norms.hpp"
#include "hosc/propagators.hpp"
#include "hosc/quadrature.hpp"
#include "hosc/spectral.hpp"
#include "hosc/time_grid.hpp"
#include "hosc/trial_family.hpp"

namespace {

void BM_HermiteColumn(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto col = hosc::hermite_column(degree, 0.7);
        benchmark::DoNotOptimize(col.data());
    }
}
BENCHMARK(BM_HermiteColumn)->Arg(32)->Arg(128)->Arg(384);

void BM_GaussHermite(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = hosc::gauss_hermite(order);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(BM_GaussHermite)->Arg(32)->Arg(128)->Arg(384);

hosc::SpectralField sample_field(int dim, int cutoff) {
    hosc::TrialFamily fam;
    fam.dimension = dim;
    fam.cutoff = cutoff;
    return fam.draw(0);
}

void BM_LevelSynthesis(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    auto f = sample_field(dim, cutoff);
    auto grid = hosc::default_grid(dim, cutoff);
    for (auto _ : state) {
        auto lv = hosc::level_synthesis(f, grid);
        benchmark::DoNotOptimize(lv.data.data());
    }
}
BENCHMARK(BM_LevelSynthesis)->Args({1, 20})->Args({2, 16})->Args({3, 12});

void BM_AnalyzeSamples(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    auto f = sample_field(dim, cutoff);
    auto grid = hosc::default_grid(dim, cutoff);
    auto samples = hosc::synthesize(f, grid);
    for (auto _ : state) {
        auto g = hosc::analyze_samples(samples, grid, cutoff);
        benchmark::DoNotOptimize(g.coefficients.data());
    }
}
BENCHMARK(BM_AnalyzeSamples)->Args({1, 20})->Args({2, 16});

void BM_TriebelLizorkinNorm(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    auto f = sample_field(dim, cutoff);
    auto grid = hosc::default_grid(dim, cutoff);
    auto lv = hosc::level_synthesis(f, grid);
    for (auto _ : state) {
        double v = hosc::tl_norm_from_levels(lv, grid.weights, 0.25, 4.0, 2.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_TriebelLizorkinNorm)->Args({1, 20})->Args({2, 16});

void BM_OscillatorEvolve(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    auto f = sample_field(1, cutoff);
    auto grid = hosc::default_grid(1, cutoff);
    auto tg = hosc::TimeGrid::periodic_uniform(hosc::kTwoPi, 8 * cutoff);
    for (auto _ : state) {
        auto u = hosc::evolve_oscillator(f, tg, grid);
        benchmark::DoNotOptimize(u.values.data());
    }
}
BENCHMARK(BM_OscillatorEvolve)->Arg(8)->Arg(16)->Arg(32);

void BM_FreeSchrodinger(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    auto f = sample_field(1, cutoff);
    auto grid = hosc::default_grid(1, cutoff);
    const double t = static_cast<double>(state.range(1));
    for (auto _ : state) {
        auto res = hosc::free_schrodinger(f, t, grid.points);
        benchmark::DoNotOptimize(res.values.data());
    }
}
BENCHMARK(BM_FreeSchrodinger)->Args({12, 1})->Args({12, 8});

}  // namespace

BENCHMARK_MAIN();
