#include <benchmark/benchmark.h>

#include "realhur/factorizations.hpp"
#include "realhur/polysolve.hpp"
#include "realhur/real_signs.hpp"

using namespace realhur;

namespace {

std::vector<Partition> transpositions(int d) {
    std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
    parts[0] = 2;
    return std::vector<Partition>(static_cast<std::size_t>(d - 1), Partition(parts));
}

void BM_CountTranspositions(benchmark::State& state) {
    const auto profiles = transpositions(static_cast<int>(state.range(0)));
    std::uint64_t n = 0;
    for (auto _ : state) {
        n = count_factorizations(profiles).N;
        benchmark::DoNotOptimize(n);
    }
    state.counters["N"] = static_cast<double>(n);
}
BENCHMARK(BM_CountTranspositions)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_CountReorder(benchmark::State& state) {
    const auto profiles = parse_profile_list("3,1,1,1|2,1,1,1,1|2,1,1,1,1|2,1,1,1,1");
    CountOptions o;
    o.reorder_for_pruning = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(count_factorizations(profiles, o).N);
}
BENCHMARK(BM_CountReorder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolveAll(benchmark::State& state, const char* profiles) {
    const auto spec = BranchSpec::with_default_values(parse_profile_list(profiles));
    SolverOptions o;
    o.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_all(spec, o).solutions.size());
}
BENCHMARK_CAPTURE(BM_SolveAll, cubic, "2,1|2,1")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveAll, quartic_transpositions, "2,1,1|2,1,1|2,1,1")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveAll, quintic_transpositions, "2,1,1,1|2,1,1,1|2,1,1,1|2,1,1,1")
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

void BM_SNumber(benchmark::State& state) {
    const auto spec = BranchSpec::with_default_values(parse_profile_list("2,2,1|2,1,1,1|2,1,1,1"));
    for (auto _ : state) {
        SolveSession session({});
        benchmark::DoNotOptimize(s_number(session, spec).s);
    }
}
BENCHMARK(BM_SNumber)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
