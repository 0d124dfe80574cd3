#include "securepath/instance.hpp"
#include "securepath/wavefront.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace securepath;

void BM_Build(benchmark::State& state)
{
    const Instance inst = genRandom(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(Diagram::build(inst.points, inst.frame, inst.cfg).faceCount());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Build)->RangeMultiplier(2)->Range(1000, 16000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Wavefront(benchmark::State& state)
{
    const Instance inst = genRandom(static_cast<std::size_t>(state.range(0)), 7);
    const Diagram base = Diagram::build(inst.points, inst.frame, inst.cfg);
    for (auto _ : state) {
        state.PauseTiming();
        Diagram d = base;
        state.ResumeTiming();
        benchmark::DoNotOptimize(solve(d, siteId(inst.sourceIndex), siteId(inst.targetIndex)).path.cost);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Wavefront)->RangeMultiplier(2)->Range(1000, 32000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Tritangent(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(0.0, 1.0), rad(0.0, 0.05);
    std::vector<Disk> disks;
    for (int i = 0; i < 3 * 1024; ++i)
        disks.push_back({{coord(rng), coord(rng)}, rad(rng)});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tritangentCircles(disks[i], disks[i + 1], disks[i + 2]));
        i = (i + 3) % disks.size();
    }
}
BENCHMARK(BM_Tritangent);

} // namespace

BENCHMARK_MAIN();
