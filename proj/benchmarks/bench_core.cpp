#include <benchmark/benchmark.h>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/instances.hpp"

using namespace schelling;

namespace {

void BM_EnumerateNoEquilibriumTree(benchmark::State& state) {
    const auto inst = no_equilibrium_tree_game(2, ToleranceVector::make({1, Rational(1, 2)}));
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = enumerate_placements(inst.game, {kDefaultEnumerationBudget, workers});
        benchmark::DoNotOptimize(result.opt);
    }
    state.SetItemsProcessed(state.iterations() * 2772);
}
BENCHMARK(BM_EnumerateNoEquilibriumTree)->Arg(1)->Arg(4);

// 4x4 grid, three types of two agents: 16!/(2!^3 10!) = 720,720 placements
void BM_EnumerateGrid(benchmark::State& state) {
    const auto game = GameInstance::make(grid(4, 4), 2, ToleranceVector::make({1, Rational(1, 2), 0}));
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = enumerate_placements(game, {kDefaultEnumerationBudget, workers});
        benchmark::DoNotOptimize(result.opt);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(placement_count(game)));
}
BENCHMARK(BM_EnumerateGrid)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SocialWelfarePosInstance(benchmark::State& state) {
    const auto inst = pos_game(2, Rational(1, 2));
    const auto& a = inst.assignments.at("equilibrium_v");
    for (auto _ : state) benchmark::DoNotOptimize(social_welfare(inst.game, a));
}
BENCHMARK(BM_SocialWelfarePosInstance);

void BM_IsEquilibriumPosInstance(benchmark::State& state) {
    const auto inst = pos_game(2, Rational(1, 2));
    const auto& a = inst.assignments.at("equilibrium_v");
    for (auto _ : state) benchmark::DoNotOptimize(is_equilibrium(inst.game, a).is_equilibrium);
}
BENCHMARK(BM_IsEquilibriumPosInstance);

void BM_BinaryGridConstruction(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto game = GameInstance::make(grid(n, n), n, standard_tolerance(ToleranceKind::alpha_binary, n - 1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(construct_binary_grid(game));
}
BENCHMARK(BM_BinaryGridConstruction)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
