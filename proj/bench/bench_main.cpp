// Serial against OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "combinorm/corpus.hpp"
#include "combinorm/duality.hpp"
#include "combinorm/emulation.hpp"
#include "combinorm/norms.hpp"
#include "combinorm/polytope.hpp"

using namespace combinorm;

namespace {

// Unit ball of the C6 clique norm: 6 coordinates, 24 sign constraints.
Polytope c6_ball() {
  const Graph g = Graph::cycle(6);
  return unit_ball(NormContext(cliques(g), g.vertices()));
}

void vertices_double_description(benchmark::State& state) {
  const Polytope p = c6_ball();
  for (auto _ : state) benchmark::DoNotOptimize(vertices(p));
}
BENCHMARK(vertices_double_description)->Unit(benchmark::kMillisecond);

void vertices_bruteforce_serial(benchmark::State& state) {
  const Polytope p = c6_ball();
  for (auto _ : state) benchmark::DoNotOptimize(vertices_bruteforce(p));
}
BENCHMARK(vertices_bruteforce_serial)->Unit(benchmark::kMillisecond);

void vertices_bruteforce_omp(benchmark::State& state) {
  const Polytope p = c6_ball();
  for (auto _ : state) benchmark::DoNotOptimize(vertices_bruteforce_parallel(p));
}
BENCHMARK(vertices_bruteforce_omp)->Unit(benchmark::kMillisecond);

const std::vector<Graph>& six_vertex_corpus() {
  static const std::vector<Graph> graphs = generate_corpus(6);
  return graphs;
}

void sweep_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus_sweep(six_vertex_corpus(), {}, 1));
}
BENCHMARK(sweep_serial)->Unit(benchmark::kMillisecond);

void sweep_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus_sweep(six_vertex_corpus(), {}, 0));
}
BENCHMARK(sweep_omp)->Unit(benchmark::kMillisecond);

void search_serial(benchmark::State& state) {
  const Family f = cliques(Graph::cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(search_emulation_serial(f, 2));
}
BENCHMARK(search_serial)->Unit(benchmark::kMillisecond);

void search_omp(benchmark::State& state) {
  const Family f = cliques(Graph::cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(search_emulation(f, 2));
}
BENCHMARK(search_omp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
