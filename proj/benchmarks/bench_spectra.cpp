#include <benchmark/benchmark.h>

#include "hausdorff/case_studies.hpp"
#include "hausdorff/spectra.hpp"

using namespace hausdorff;

namespace {

void bm_grid_spectrum(benchmark::State& state) {
    const OperatorSpec spec = remark_circle_document().to_operator_spec();
    const SymbolTable table(spec);
    GridPlan plan;
    plan.span = static_cast<double>(state.range(0));
    plan.step = 0.01;
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum_frequency_grid(table, plan));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(2.0 * *plan.span / *plan.step));
}
BENCHMARK(bm_grid_spectrum)->Arg(20)->Arg(100);

void bm_torus_spectrum(benchmark::State& state) {
    const OperatorSpec spec = two_term_document().to_operator_spec();
    const SymbolTable table(spec);
    const RelationReport relation{RelationVerdict::ExactlyIndependent, std::nullopt, 0.0, 0};
    TorusPlan plan;
    plan.samples = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum_torus(table, relation, plan));
    state.SetItemsProcessed(state.iterations() * plan.samples);
}
BENCHMARK(bm_torus_spectrum)->Arg(10'000)->Arg(100'000);

} // namespace
