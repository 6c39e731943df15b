// Serial reference vs OpenMP kernels on the two enumeration hot loops.

#include <benchmark/benchmark.h>

#include "codeweights/codes.hpp"
#include "codeweights/kernels.hpp"

using namespace codeweights;

namespace {

struct WeightFixture {
    FieldCtx ctx;
    DefiningSet set;
    WeightFixture(std::uint32_t p, std::uint32_t e, int i)
        : ctx(FieldCtx::make(p, e)), set(defining_set(ctx, i)) {}
};

const WeightFixture& fixture_74() {
    static WeightFixture f(7, 4, 0);
    return f;
}

const WeightFixture& fixture_75() {
    static WeightFixture f(7, 5, 0);
    return f;
}

void BM_weight_direct_serial(benchmark::State& state) {
    const auto& f = fixture_74();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_histogram_direct_serial(f.ctx, f.set));
}

void BM_weight_buckets_serial(benchmark::State& state) {
    const auto& f = fixture_74();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_histogram_buckets_serial(f.ctx, f.set));
}

void BM_weight_buckets_parallel(benchmark::State& state) {
    const auto& f = fixture_74();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_histogram_buckets_parallel(f.ctx, f.set));
}

void BM_weight_buckets_serial_75(benchmark::State& state) {
    const auto& f = fixture_75();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_histogram_buckets_serial(f.ctx, f.set));
}

void BM_weight_buckets_parallel_75(benchmark::State& state) {
    const auto& f = fixture_75();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weight_histogram_buckets_parallel(f.ctx, f.set));
}

struct WeilFixture {
    FieldCtx ctx;
    kernels::FieldTables tables;
    std::vector<std::uint32_t> powmap;
    WeilFixture(std::uint32_t p, std::uint32_t e)
        : ctx(FieldCtx::make(p, e)), tables(ctx), powmap(kernels::power_map(ctx, tables, 1)) {}
};

const WeilFixture& weil_310() {
    static WeilFixture f(3, 10);
    return f;
}

void BM_weil_histogram_serial(benchmark::State& state) {
    const auto& f = weil_310();
    const FFElem alpha = f.ctx.element(7);
    const FFElem beta = f.ctx.element(11);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weil_exponent_histogram_serial(
            f.ctx, f.tables, f.powmap, alpha, beta));
}

void BM_weil_histogram_parallel(benchmark::State& state) {
    const auto& f = weil_310();
    const FFElem alpha = f.ctx.element(7);
    const FFElem beta = f.ctx.element(11);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::weil_exponent_histogram_parallel(
            f.ctx, f.tables, f.powmap, alpha, beta));
}

}  // namespace

BENCHMARK(BM_weight_direct_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_buckets_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_buckets_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_buckets_serial_75)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weight_buckets_parallel_75)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weil_histogram_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weil_histogram_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
