#include <benchmark/benchmark.h>

#include "domtab/domino.hpp"
#include "domtab/operators.hpp"
#include "domtab/verify.hpp"

using namespace domtab;

namespace {

tableau highest_weight(const partition& shape, int n) {
    std::vector<std::vector<int>> grid;
    for (int r = 1; r <= shape.rows(); ++r)
        grid.emplace_back(static_cast<std::size_t>(shape.part(r)), r);
    return tableau::from_grid(grid, n);
}

} // namespace

static void BM_bender_knuth(benchmark::State& state) {
    tableau T = highest_weight(partition({4, 4, 4}), 6);
    int i = 1;
    for (auto _ : state) {
        T = bender_knuth(T, i);
        i = i % 5 + 1;
        benchmark::DoNotOptimize(T);
    }
}
BENCHMARK(BM_bender_knuth);

static void BM_evacuation(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    tableau T = highest_weight(partition({4, 4, 4}), n);
    for (auto _ : state) {
        T = evacuation(T);
        benchmark::DoNotOptimize(T);
    }
}
BENCHMARK(BM_evacuation)->Arg(4)->Arg(6)->Arg(8);

static void BM_sigma_word(benchmark::State& state) {
    int n = 8;
    tableau T = highest_weight(partition({4, 4, 4}), n);
    operator_word word = operator_word::parse("sigma4", n);
    std::vector<int> indices = expand_to_t_indices(word, n);
    for (auto _ : state) {
        T = apply_t_word(indices, T);
        benchmark::DoNotOptimize(T);
    }
}
BENCHMARK(BM_sigma_word);

static void BM_enumerate_shape(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    partition shape({4, 4, 4});
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_tableau(shape, n, [&](const tableau&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_enumerate_shape)->Arg(5)->Arg(6)->Arg(7);

static void BM_kostka2(benchmark::State& state) {
    partition shape({4, 4, 2});
    std::vector<int> beta_prime{3, 2};
    for (auto _ : state) {
        auto count = kostka2(shape, beta_prime, 4);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_kostka2);

static void BM_domino_roundtrip(benchmark::State& state) {
    tableau T = tableau::from_grid({{1, 1, 2, 2}, {3, 3, 4, 4}}, 4);
    for (auto _ : state) {
        tableau back = tableau_from_domino(domino_from_tableau(T));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_domino_roundtrip);

BENCHMARK_MAIN();
