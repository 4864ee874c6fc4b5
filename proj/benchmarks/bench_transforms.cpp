#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include <linoep/crossterm.hpp>
#include <linoep/gsom.hpp>
#include <linoep/linoep.hpp>

namespace {

linoep::VectorSet make_set(std::size_t n, std::size_t m) {
    std::mt19937_64 rng(n * 1000003 + m);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<linoep::DenseVector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> e(m);
        for (double& x : e) x = u(rng);
        vs.emplace_back(std::move(e));
    }
    return linoep::VectorSet(std::move(vs));
}

void BM_RankTest(benchmark::State& state) {
    const linoep::VectorSet input =
        make_set(state.range(0), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linoep::is_linearly_independent(input));
    }
}

void BM_GsomTransform(benchmark::State& state) {
    const linoep::VectorSet input = make_set(state.range(0), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linoep::gsom_transform(input));
    }
}

void BM_LinoepTransform(benchmark::State& state) {
    const linoep::VectorSet input = make_set(state.range(0), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linoep::linoep_transform(input));
    }
}

void BM_FullPipeline(benchmark::State& state) {
    const linoep::VectorSet input = make_set(state.range(0), state.range(1));
    const linoep::DenseVector sum = linoep::sum_vectors(input);
    for (auto _ : state) {
        linoep::LinoepResult result = linoep::linoep_transform(input);
        result = linoep::noep_extend(std::move(result), sum);
        benchmark::DoNotOptimize(result);
    }
}

void BM_Classify(benchmark::State& state) {
    const linoep::VectorSet input = make_set(state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linoep::classify(input));
    }
}

void BM_PermutationSweep(benchmark::State& state) {
    const linoep::VectorSet input =
        make_set(state.range(0), state.range(0) + 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linoep::permutation_sweep(input));
    }
}

}  // namespace

BENCHMARK(BM_RankTest)->Args({8, 16})->Args({32, 64})->Args({64, 256});
BENCHMARK(BM_GsomTransform)->Args({8, 16})->Args({32, 64})->Args({64, 256});
BENCHMARK(BM_LinoepTransform)->Args({8, 16})->Args({32, 64})->Args({64, 256});
BENCHMARK(BM_FullPipeline)->Args({8, 16})->Args({32, 64});
BENCHMARK(BM_Classify)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_PermutationSweep)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
