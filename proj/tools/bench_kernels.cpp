// Serial reference vs OpenMP kernels. Run with e.g.
//   OMP_NUM_THREADS=4 ./bench_kernels --benchmark_min_time=0.2

#include <benchmark/benchmark.h>

#include "cfinite/catalan.hpp"
#include "cfinite/certify.hpp"
#include "cfinite/recurrence.hpp"

#include <random>

using namespace cfinite;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) ? "parallel/" + std::to_string(parallel_threads()) : "serial");
}

void BM_Ballot(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalan_ballot(static_cast<unsigned>(state.range(1)), kMaxBallotCap, mode(state)));
    }
    label(state);
}
BENCHMARK(BM_Ballot)->ArgsProduct({{0, 1}, {11, 13}})->Unit(benchmark::kMillisecond);

void BM_ClosedTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalan_closed_table(static_cast<std::size_t>(state.range(1)), mode(state)));
    }
    label(state);
}
BENCHMARK(BM_ClosedTable)->ArgsProduct({{0, 1}, {4096}})->Unit(benchmark::kMillisecond);

void BM_OddIndices(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(odd_catalan_indices(static_cast<std::size_t>(state.range(1)), mode(state)));
    }
    label(state);
}
BENCHMARK(BM_OddIndices)->ArgsProduct({{0, 1}, {4096}})->Unit(benchmark::kMillisecond);

void BM_HankelWitnesses(benchmark::State& state) {
    const std::size_t K = static_cast<std::size_t>(state.range(1));
    const Sequence seq = catalan_holonomic(4 * K + 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hankel_witnesses(seq, K, mode(state)));
    }
    label(state);
}
BENCHMARK(BM_HankelWitnesses)->ArgsProduct({{0, 1}, {10}})->Unit(benchmark::kMillisecond);

std::vector<RationalRecurrence> sweep_candidates(std::size_t count) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(0, 8);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<RationalRecurrence> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<ExactRational> a(static_cast<std::size_t>(order(rng)));
        for (auto& x : a) {
            x = make_rational(num(rng), den(rng));
        }
        out.push_back(rational_recurrence(a));
    }
    return out;
}

void BM_RefuteSweep(benchmark::State& state) {
    const auto candidates = sweep_candidates(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refute_sweep(candidates, kDefaultExactCap, mode(state)));
    }
    label(state);
}
BENCHMARK(BM_RefuteSweep)->ArgsProduct({{0, 1}, {32}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
