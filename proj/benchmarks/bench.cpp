#include <benchmark/benchmark.h>

#include "aak/decide.hpp"
#include "aak/diagram.hpp"
#include "aak/generate.hpp"
#include "aak/moves.hpp"
#include "aak/oracle.hpp"

namespace {

aak::Diagram corpus_sample(int max_crossings) {
    aak::EnumConfig cfg;
    cfg.max_crossings = max_crossings;
    std::vector<aak::Diagram> out = aak::enumerate_unknot_diagrams(cfg);
    return out.back();  // largest diagram: (n, canonical code) sorted
}

void BM_bracket(benchmark::State& state) {
    aak::Diagram d = corpus_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(aak::bracket(d));
}
BENCHMARK(BM_bracket)->Arg(6)->Arg(8)->Arg(10);

void BM_canonical_code(benchmark::State& state) {
    aak::Diagram d = corpus_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(aak::canonical_code(d));
}
BENCHMARK(BM_canonical_code)->Arg(6)->Arg(8)->Arg(10);

void BM_decide(benchmark::State& state) {
    aak::Diagram d = corpus_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(aak::decide(d));
}
BENCHMARK(BM_decide)->Arg(6)->Arg(8)->Arg(10);

void BM_flype_sites(benchmark::State& state) {
    aak::Diagram d = corpus_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(aak::flype_sites(d));
}
BENCHMARK(BM_flype_sites)->Arg(6)->Arg(8);

void BM_enumerate(benchmark::State& state) {
    for (auto _ : state) {
        aak::EnumConfig cfg;
        cfg.max_crossings = static_cast<int>(state.range(0));
        benchmark::DoNotOptimize(aak::enumerate_unknot_diagrams(cfg));
    }
}
BENCHMARK(BM_enumerate)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
