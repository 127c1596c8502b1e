#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seshadri/cluster.hpp"
#include "seshadri/conditions.hpp"
#include "seshadri/witness.hpp"

using namespace seshadri;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_CandidateSweep(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(candidate_sweep(2, 400, 200, policy(state)));
    }
}

std::vector<LocalCurve> random_curves(std::size_t count)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<LocalCurve> out;
    while (out.size() < count) {
        BiSeries::Terms t;
        for (int i = 0; i < 6; ++i) {
            const int d = deg(rng);
            std::uniform_int_distribution<int> px(0, d);
            const int p = px(rng);
            t[Monomial{p, d - p}] += coeff(rng);
        }
        BiSeries s(std::move(t));
        if (!s.is_zero()) {
            out.emplace_back(std::move(s));
        }
    }
    return out;
}

void BM_ClusterBatch(benchmark::State& state)
{
    const auto curves = random_curves(4000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_prop51_batch(curves, 5, policy(state)));
    }
}

void BM_GenericityProbe(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(genericity_probe(400, 11, 9, policy(state)));
    }
}

} // namespace

// Argument 0 is the serial reference, 1 the OpenMP path.
BENCHMARK(BM_CandidateSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusterBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericityProbe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
