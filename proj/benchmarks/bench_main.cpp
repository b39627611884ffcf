#include <benchmark/benchmark.h>

#include "mdl/canon.hpp"
#include "mdl/densest.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/named.hpp"
#include "mdl/spectrum.hpp"

using namespace mdl;

static void BM_CanonicalPetersen(benchmark::State& state) {
    const SimpleGraph g = decode_graph6("IheA@GUAo");
    for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(BM_CanonicalPetersen);

static void BM_CanonicalFriendship(benchmark::State& state) {
    const SimpleGraph g = make_named("friendship:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(BM_CanonicalFriendship)->Arg(3)->Arg(5)->Arg(7);

static void BM_EnumerateConnected(benchmark::State& state) {
    EnumerationFilter f;
    f.max_n = static_cast<int>(state.range(0));
    f.connectivity = Connectivity::Connected;
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_graph(f, [&](const SimpleGraph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_DensestMinor(benchmark::State& state) {
    const SimpleGraph g = make_named("complete_bipartite:3,3");
    MinorSearchOptions o;
    o.backend = state.range(0) == 0 ? DensestBackend::Closure : DensestBackend::BranchSets;
    for (auto _ : state) {
        DensestMemo memo;
        o.memo = &memo;
        benchmark::DoNotOptimize(densest_minor_rank(g, o));
    }
}
BENCHMARK(BM_DensestMinor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LowSpectrum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_density_minimal(static_cast<int>(state.range(0)), Rational(3, 2)));
}
BENCHMARK(BM_LowSpectrum)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
