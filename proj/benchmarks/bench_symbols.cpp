#include <benchmark/benchmark.h>

#include "hausdorff/case_studies.hpp"
#include "hausdorff/symbols.hpp"

using namespace hausdorff;

namespace {

OperatorSpec mixed_spec(int d, int terms) {
    std::vector<ScaleEntry> entries;
    for (int k = 0; k < terms; ++k) {
        ScaleEntry e;
        e.index = k;
        e.coefficient = {1.0 / (k + 1.0), 0.2};
        e.matrix = ((k % 2) ? -1.0 : 1.0) * (1.5 + k) * RealMatrix::Identity(d, d);
        entries.push_back(std::move(e));
    }
    return OperatorSpec::validate(d, std::move(entries));
}

void bm_matrix_symbol(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const OperatorSpec spec = mixed_spec(d, 8);
    const SymbolTable table(spec);
    RealVector s = RealVector::Constant(d, 0.37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(table.matrix(s));
        s(0) += 1e-3;
    }
}
BENCHMARK(bm_matrix_symbol)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_matrix_eigenvalues(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const OperatorSpec spec = mixed_spec(d, 8);
    const SymbolTable table(spec);
    RealVector s = RealVector::Constant(d, 0.37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_eigenvalues(table.matrix(s)));
        s(0) += 1e-3;
    }
}
BENCHMARK(bm_matrix_eigenvalues)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_matrix_norm(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const OperatorSpec spec = mixed_spec(d, 8);
    const SymbolTable table(spec);
    RealVector s = RealVector::Constant(d, 0.37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(table.matrix_norm(s));
        s(0) += 1e-3;
    }
}
BENCHMARK(bm_matrix_norm)->Arg(1)->Arg(3);

void bm_diagonalize(benchmark::State& state) {
    const OperatorSpec spec = cell_growth_document().to_operator_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(simultaneous_diagonalize(spec));
}
BENCHMARK(bm_diagonalize);

} // namespace
