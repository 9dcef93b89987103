#include <benchmark/benchmark.h>

#include <cmath>

#include "hanoi/graphs.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/recurrence.hpp"
#include "hanoi/solvers.hpp"

namespace {

using namespace hanoi;

void BM_BfsClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions opts;
  opts.want_witness = false;
  for (auto _ : state) {
    auto r = bfs_distance(Model::classical(), standard_state(n, Peg(1)),
                          GoalPredicate::standard_on(Peg(2)), opts);
    benchmark::DoNotOptimize(r.distance);
  }
  state.counters["states"] = std::pow(3.0, n);
}
BENCHMARK(BM_BfsClassical)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BfsRelaxedWithWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t explored = 0;
  for (auto _ : state) {
    auto r = bfs_distance(Model::relaxed(1), standard_state(n, Peg(1)),
                          GoalPredicate::standard_on(Peg(2)));
    explored = r.explored;
    benchmark::DoNotOptimize(r.witness);
  }
  state.counters["explored"] = static_cast<double>(explored);
}
BENCHMARK(BM_BfsRelaxedWithWitness)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_EvalMoveCounts(benchmark::State& state) {
  const MoveGraph g = reference_graph(GraphFamily::kFiveEdge);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = eval_move_counts(g, n);
    benchmark::DoNotOptimize(t.at(Peg(2), Peg(1), n));
  }
}
BENCHMARK(BM_EvalMoveCounts)->RangeMultiplier(4)->Range(16, 1024);

void BM_DirectedMove(benchmark::State& state) {
  const MoveGraph g = reference_graph(GraphFamily::kCycle);
  const int n = static_cast<int>(state.range(0));
  std::size_t len = 0;
  for (auto _ : state) {
    auto seq = directed_move(g, n, Peg(2), Peg(1));
    len = seq.size();
    benchmark::DoNotOptimize(seq.data());
  }
  state.counters["moves"] = static_cast<double>(len);
}
BENCHMARK(BM_DirectedMove)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
