#include <benchmark/benchmark.h>

#include "grpdim/clique.hpp"
#include "grpdim/closed_forms.hpp"
#include "grpdim/cyclic_lattice.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/graph_builders.hpp"
#include "grpdim/order_profile.hpp"
#include "grpdim/reduced_graph.hpp"
#include "grpdim/sdim.hpp"

using namespace grpdim;

namespace {

void BM_build_group(benchmark::State& state, const char* descriptor) {
  for (auto _ : state) benchmark::DoNotOptimize(build_group(descriptor));
}

void BM_order_profile(benchmark::State& state, const char* descriptor) {
  const FiniteGroup g = build_group(descriptor);
  for (auto _ : state) benchmark::DoNotOptimize(order_profile(g));
}

void BM_cyclic_lattice(benchmark::State& state, const char* descriptor) {
  const FiniteGroup g = build_group(descriptor);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_lattice(g));
}

void BM_build_graph(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const FiniteGroup g = build_group(descriptor);
  const auto profile = order_profile(g);
  const auto lattice = cyclic_lattice(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(g, family, profile, lattice));
}

void BM_sdim_vertex_cover(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(sdim_vertex_cover(graph));
}

void BM_sdim_diameter2(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(sdim_diameter2(graph));
}

void BM_sdim_oracle(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(sdim_subset_oracle(graph));
}

void BM_sdim_formula(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const FiniteGroup g = build_group(descriptor);
  const auto profile = order_profile(g);
  const auto lattice = cyclic_lattice(g);
  for (auto _ : state) {
    switch (family) {
      case GraphFamily::supergraph:
        benchmark::DoNotOptimize(sdim_order_supergraph(g, profile));
        break;
      case GraphFamily::enhanced:
        benchmark::DoNotOptimize(sdim_enhanced(g, profile, lattice));
        break;
      default:
        benchmark::DoNotOptimize(sdim_reduced(g, profile));
        break;
    }
  }
}

void BM_strong_resolving_graph(benchmark::State& state, const char* descriptor,
                               GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(strong_resolving_graph(graph));
}

void BM_quotient(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_graph(graph));
}

void BM_max_clique(benchmark::State& state, const char* descriptor, GraphFamily family) {
  const SimpleGraph graph = build_graph(build_group(descriptor), family);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(graph));
}

}  // namespace

BENCHMARK_CAPTURE(BM_build_group, S5, "S5")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_build_group, S6, "S6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_build_group, Q32, "Q32")->Unit(benchmark::kMicrosecond);

BENCHMARK_CAPTURE(BM_order_profile, S5, "S5")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_cyclic_lattice, S5, "S5")->Unit(benchmark::kMicrosecond);

BENCHMARK_CAPTURE(BM_build_graph, power_S5, "S5", GraphFamily::power)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_build_graph, enhanced_S5, "S5", GraphFamily::enhanced)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_build_graph, supergraph_S5, "S5", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_build_graph, reduced_S5, "S5", GraphFamily::reduced_power)
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_CAPTURE(BM_strong_resolving_graph, supergraph_S5, "S5", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_quotient, supergraph_S5, "S5", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_max_clique, reduced_S5, "S5", GraphFamily::reduced_power)
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_CAPTURE(BM_sdim_formula, supergraph_S5, "S5", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_sdim_formula, enhanced_S5, "S5", GraphFamily::enhanced)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_sdim_formula, reduced_S5, "S5", GraphFamily::reduced_power)
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_CAPTURE(BM_sdim_diameter2, supergraph_S5, "S5", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_sdim_vertex_cover, supergraph_S4, "S4", GraphFamily::supergraph)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_sdim_vertex_cover, enhanced_S4, "S4", GraphFamily::enhanced)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_sdim_oracle, reduced_Q16, "Q16", GraphFamily::reduced_power)
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
