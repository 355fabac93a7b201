// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <array>

#include <benchmark/benchmark.h>

#include "sqpaint/choosability.hpp"
#include "sqpaint/circulation.hpp"
#include "sqpaint/lemma_orientations.hpp"
#include "sqpaint/named_graphs.hpp"

using namespace sqpaint;

namespace {

Digraph orientation(int which) {
    switch (which) {
    case 0: return lemma_orientation("fig10d_k6ve3").digraph;
    case 1: return lemma_orientation("fig10c_k4v2e2").digraph;
    default: return lemma_orientation("cycle_2pendant", 13).digraph;
    }
}

void circulations_serial(benchmark::State& state) {
    const Digraph d = orientation(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_circulations_serial(d));
    state.SetLabel(std::to_string(d.arc_count()) + " arcs");
}

void circulations_parallel(benchmark::State& state) {
    const Digraph d = orientation(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_circulations(d));
    state.SetLabel(std::to_string(d.arc_count()) + " arcs");
}

struct Instance {
    Graph g;
    TokenFn f;
    const char* name;
};

Instance instance(int which) {
    switch (which) {
    case 0: {
        const Graph g = named_graph("c6_square");
        return {g, tokens_from_marking(g, lemma_marking("c6_square")), "c6_square d1"};
    }
    case 1: {
        const Graph g = named_graph("k2_join_c4");
        return {g, tokens_from_marking(g, lemma_marking("k2_join_c4")), "k2_join_c4 d1"};
    }
    default: {
        const std::array<int, 1> seven{7};
        return {square(named_graph("cycle", seven)), TokenFn::constant(7, 3), "C7^2 f=3"};
    }
    }
}

void choosable_serial(benchmark::State& state) {
    const Instance in = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_f_choosable_serial(in.g, in.f));
    state.SetLabel(in.name);
}

void choosable_parallel(benchmark::State& state) {
    const Instance in = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_f_choosable(in.g, in.f));
    state.SetLabel(in.name);
}

} // namespace

BENCHMARK(circulations_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(circulations_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(choosable_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(choosable_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
