// Serial reference versus OpenMP root splitting on oracle refutations, the
// expensive case: every branch has to be explored.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "dkl/generators.hpp"
#include "dkl/oracles.hpp"

using namespace dkl;

namespace {

Graph bench_graph(int n) { return gen_degenerate_graph(n, 3, 0.7, 42); }

// Largest k with a NO answer, found once per graph size.
int refuted_k(const Graph& g, SolveResult (*solve)(const Graph&, int, const SolverOptions&)) {
  int k = 0;
  while (solve(g, k + 1, {}).answer == false) ++k;
  return k;
}

template <SolveResult (*Solve)(const Graph&, int, const SolverOptions&)>
void run(benchmark::State& state, Execution execution) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const int k = refuted_k(g, Solve);
  SolverOptions options;
  options.execution = execution;
  options.budget = std::uint64_t(1) << 40;
  for (auto _ : state) benchmark::DoNotOptimize(Solve(g, k, options).answer);
  state.counters["threads"] = execution == Execution::parallel ? omp_get_max_threads() : 1;
  state.counters["k"] = k;
}

void BM_ds_serial(benchmark::State& s) { run<solve_ds>(s, Execution::serial); }
void BM_ds_parallel(benchmark::State& s) { run<solve_ds>(s, Execution::parallel); }
void BM_ids_serial(benchmark::State& s) { run<solve_ids>(s, Execution::serial); }
void BM_ids_parallel(benchmark::State& s) { run<solve_ids>(s, Execution::parallel); }

// For induced matching the hard instance is the smallest YES k + 1.
template <Execution E>
void BM_im(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const int k = max_induced_matching_size(g) + 1;
  SolverOptions options;
  options.execution = E;
  options.budget = std::uint64_t(1) << 40;
  for (auto _ : state) benchmark::DoNotOptimize(solve_im(g, k, options).answer);
  state.counters["threads"] = E == Execution::parallel ? omp_get_max_threads() : 1;
}

}  // namespace

BENCHMARK(BM_ds_serial)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ds_parallel)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ids_serial)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ids_parallel)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_im<Execution::serial>)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_im<Execution::parallel>)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
