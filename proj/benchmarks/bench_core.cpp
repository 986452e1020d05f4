#include <benchmark/benchmark.h>

#include <random>

#include "cltop/bitopology.hpp"
#include "cltop/correspondence.hpp"
#include "cltop/search.hpp"

using namespace cltop;

namespace {

FiniteSpace random_space(std::mt19937_64& rng, int size, int generators) {
    std::uniform_int_distribution<std::uint32_t> bits(0, full_mask(size));
    std::vector<Subset> gens;
    for (int i = 0; i < generators; ++i) gens.emplace_back(size, bits(rng));
    return make_topology(size, gens);
}

void TopologyClosure(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> bits(0, full_mask(size));
    std::vector<Subset> gens;
    for (int i = 0; i < 5; ++i) gens.emplace_back(size, bits(rng));
    for (auto _ : state) {
        FiniteSpace sp = make_topology(size, gens);
        benchmark::DoNotOptimize(sp);
    }
}
BENCHMARK(TopologyClosure)->Arg(6)->Arg(10)->Arg(14);

void DerivedSet(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const FiniteSpace sp = random_space(rng, size, 5);
    std::uniform_int_distribution<std::uint32_t> bits(0, full_mask(size));
    const Subset y(size, bits(rng));
    for (auto _ : state) {
        Subset d = sp.derived_set(y);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(DerivedSet)->Arg(8)->Arg(16);

void EOperator(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    std::mt19937_64 rng(13);
    const BitopSpace sp(random_space(rng, size, 4), random_space(rng, size, 4));
    std::uniform_int_distribution<std::uint32_t> bits(0, full_mask(size));
    const Subset y(size, bits(rng));
    const Subset z(size, bits(rng));
    for (auto _ : state) {
        Subset e = e_set(sp, y, z);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(EOperator)->Arg(8)->Arg(16);

void ValidityJ2(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    std::mt19937_64 rng(17);
    const BitopSpace sp(upset_topology(Relation(size).transitive_closure()),
                        random_space(rng, size, 4));
    const Formula j2 = standard_instance(schema("J2"));
    for (auto _ : state) {
        bool v = is_valid(sp, j2);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ValidityJ2)->Arg(3)->Arg(5)->Arg(7);

void EnumerateFramesDedup(benchmark::State& state) {
    const bool dedup = state.range(0) != 0;
    for (auto _ : state) {
        FrameEnumerator en(4, LogicClass::CL, {dedup});
        std::uint64_t count = 0;
        while (en.next()) ++count;
        benchmark::DoNotOptimize(count);
        state.counters["frames"] = static_cast<double>(count);
    }
}
BENCHMARK(EnumerateFramesDedup)->Arg(0)->Arg(1);

void DeltaSatisfiability(benchmark::State& state) {
    const auto gamma = delta_family(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SearchResult res =
            find_model(gamma, LogicClass::CL, static_cast<int>(state.range(0)) + 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(DeltaSatisfiability)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
