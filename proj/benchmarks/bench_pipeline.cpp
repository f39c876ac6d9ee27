#include <benchmark/benchmark.h>

#include "greymadm/document.hpp"
#include "greymadm/normalize.hpp"
#include "greymadm/pipeline.hpp"
#include "greymadm/value.hpp"

namespace {

using namespace greymadm;

void BM_Distance(benchmark::State& state) {
    const auto a = GeneralizedValue::from_components(0.1, 0.2, 0.3, 0.4);
    const auto b = GeneralizedValue::from_components(0.2, 0.4, 0.6, 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(a, b));
    }
}
BENCHMARK(BM_Distance);

void BM_NormalizeMatrix(benchmark::State& state) {
    const DecisionMatrix matrix = paper_example_document().to_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_matrix(matrix));
    }
}
BENCHMARK(BM_NormalizeMatrix);

void BM_ParseDocument(benchmark::State& state) {
    const std::string text = paper_example_json();
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_document(text));
    }
}
BENCHMARK(BM_ParseDocument);

void BM_FullPipeline(benchmark::State& state) {
    const DecisionDocument document = paper_example_document();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(document));
    }
}
BENCHMARK(BM_FullPipeline);

void BM_EmitReport(benchmark::State& state) {
    const Report report = run_pipeline(paper_example_document());
    for (auto _ : state) {
        benchmark::DoNotOptimize(emit_report(report));
    }
}
BENCHMARK(BM_EmitReport);

} // namespace

BENCHMARK_MAIN();
