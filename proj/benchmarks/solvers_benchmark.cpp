#include <benchmark/benchmark.h>

#include "maxswp/generators.hpp"
#include "maxswp/oracle_solver.hpp"
#include "maxswp/path_solver.hpp"
#include "maxswp/reduction.hpp"
#include "maxswp/tree_solver.hpp"
#include "maxswp/welfare.hpp"

using namespace maxswp;

static void BM_TreeSolver(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Tree tree = random_tree(n, 42);
    for (auto _ : state) {
        Solution s = solve_tree(tree);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(state.range(0));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TreeSolver)->RangeMultiplier(10)->Range(1000, 1'000'000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_PathSolver(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Solution s = solve_path(n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_PathSolver)->RangeMultiplier(10)->Range(1000, 100'000)->Unit(benchmark::kMillisecond);

static void BM_ExactSolverTree(benchmark::State& state) {
    const Tree tree = random_tree(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        Solution s = solve_exact(tree.graph());
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ExactSolverTree)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

static void BM_ExactSolverGadget(benchmark::State& state) {
    const GadgetGraph gadget = build_gadget(enumerate_instances(3).front());
    for (auto _ : state) {
        Solution s = solve_exact(gadget.graph);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ExactSolverGadget)->Unit(benchmark::kMillisecond);

static void BM_GrandWelfare(benchmark::State& state) {
    const Tree tree = random_tree(static_cast<std::size_t>(state.range(0)), 9);
    const Partition grand = Partition::grand(tree.order());
    for (auto _ : state) {
        Rational w = welfare(tree.graph(), grand);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_GrandWelfare)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
