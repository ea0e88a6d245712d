#include <benchmark/benchmark.h>

#include <random>

#include "hausdorff/geometry.hpp"

using namespace hausdorff;

namespace {

std::vector<Complex> random_annulus(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.3, 1.3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::polar(radius(rng), angle(rng)));
    return out;
}

void bm_hausdorff_distance(benchmark::State& state) {
    const auto x = random_annulus(static_cast<std::size_t>(state.range(0)), 1);
    const auto y = random_annulus(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hausdorff_distance(x, y));
    state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(bm_hausdorff_distance)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void bm_nearest_neighbor_gap(benchmark::State& state) {
    const auto x = random_annulus(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_nearest_neighbor_gap(x));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_nearest_neighbor_gap)->Arg(10'000)->Arg(100'000);

} // namespace
