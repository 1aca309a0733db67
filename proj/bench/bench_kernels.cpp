// Parallel kernels against their serial references.

#include "jtdfe/bench.hpp"

#include <benchmark/benchmark.h>

using namespace jtdfe;

namespace {

const KoblitzCurve& k163() {
    static const KoblitzCurve curve(CurveConfig::k163());
    return curve;
}

const Lut& lut_w5() {
    static const Lut lut = gen_lut(LutConfig::make(5, 4, Mu::Plus));
    return lut;
}

void BM_LutParallel(benchmark::State& state) {
    const LutConfig c = LutConfig::make(static_cast<std::uint32_t>(state.range(0)), 4, Mu::Plus);
    for (auto _ : state) benchmark::DoNotOptimize(gen_lut(c));
}

void BM_LutSerial(benchmark::State& state) {
    const LutConfig c = LutConfig::make(static_cast<std::uint32_t>(state.range(0)), 4, Mu::Plus);
    for (auto _ : state) benchmark::DoNotOptimize(gen_lut_serial(c));
}

BenchConfig trial_config(std::vector<Method> methods) {
    BenchConfig cfg;
    cfg.trials = 64;
    cfg.methods = std::move(methods);
    cfg.lut = &lut_w5();
    cfg.greedy_stats = false;
    return cfg;
}

void BM_TrialsParallel(benchmark::State& state) {
    const BenchConfig cfg = trial_config({Method::Tjsf, Method::Jtdfe});
    for (auto _ : state) benchmark::DoNotOptimize(run_bench(k163(), cfg));
}

void BM_TrialsSerial(benchmark::State& state) {
    const BenchConfig cfg = trial_config({Method::Tjsf, Method::Jtdfe});
    for (auto _ : state) benchmark::DoNotOptimize(run_bench_serial(k163(), cfg));
}

template <Method M>
void BM_DoubleScalar(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const KoblitzCurve& c = k163();
    const BigInt k = random_scalar(rng, c.params().n), l = random_scalar(rng, c.params().n);
    const AffinePoint p = c.random_point(rng), q = c.random_point(rng);
    for (auto _ : state) {
        if constexpr (M == Method::Naive) benchmark::DoNotOptimize(double_scalar_naive(c, k, l, p, q));
        else if constexpr (M == Method::Tjsf) benchmark::DoNotOptimize(double_scalar_tjsf(c, k, l, p, q));
        else benchmark::DoNotOptimize(double_scalar_jtdfe(c, k, l, p, q, lut_w5()));
    }
}

}  // namespace

BENCHMARK(BM_LutParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LutSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DoubleScalar<Method::Naive>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DoubleScalar<Method::Tjsf>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DoubleScalar<Method::Jtdfe>)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
