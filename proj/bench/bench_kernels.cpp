// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "rooks/random.hpp"
#include "rooks/xray.hpp"

using namespace rooks;

namespace {

Partition staircase_block(std::int64_t N) { return dilate(Partition({4, 4, 3, 2}), N); }

void BM_MarginalMatrix(benchmark::State& state) {
    const auto lambda = staircase_block(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(marginal_matrix(lambda));
}
void BM_MarginalMatrixSerial(benchmark::State& state) {
    const auto lambda = staircase_block(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(marginal_matrix_serial(lambda));
}

void BM_SampledMarginals(benchmark::State& state) {
    const auto lambda = staircase_block(8);
    for (auto _ : state) benchmark::DoNotOptimize(sampled_marginals(lambda, state.range(0), 1));
}
void BM_SampledMarginalsSerial(benchmark::State& state) {
    const auto lambda = staircase_block(8);
    for (auto _ : state) benchmark::DoNotOptimize(sampled_marginals_serial(lambda, state.range(0), 1));
}

void BM_LimitShapeExperiment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(limit_shape_experiment(Partition({1}), state.range(0), 200, 0));
}
void BM_LimitShapeExperimentSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(limit_shape_experiment_serial(Partition({1}), state.range(0), 200, 0));
}

}  // namespace

BENCHMARK(BM_MarginalMatrix)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MarginalMatrixSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledMarginals)->Arg(1 << 16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampledMarginalsSerial)->Arg(1 << 16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LimitShapeExperiment)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LimitShapeExperimentSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
