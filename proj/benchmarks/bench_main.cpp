#include <benchmark/benchmark.h>

#include "chase/cstar.hpp"
#include "chase/gadget.hpp"
#include "chase/game.hpp"
#include "chase/oracles.hpp"
#include "chase/protocol.hpp"
#include "chase/reduction.hpp"
#include "chase/streaming.hpp"

using namespace chase;

static void BM_EvalSc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto inst = sample_random_sc(n, 4, 1.5 / static_cast<double>(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_sc(inst));
}
BENCHMARK(BM_EvalSc)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_Reduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto params = choose_params(n, 1, c_star_threshold(n));
  Rng rng(2);
  const auto inst = sample_uniform_or_lpce(n, 1, params.r, params.t, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_or_lpce(inst, rng, ReduceOptions{.require_feasible = false}));
}
BENCHMARK(BM_Reduce)->Arg(1024)->Arg(4096);

static void BM_ForwardProtocol(benchmark::State& state) {
  Rng rng(3);
  const auto inst = sample_random_intersect_sc(256, 3, 1.5 / 256, rng);
  for (auto _ : state) benchmark::DoNotOptimize(forward_sc_protocol(inst).answer);
}
BENCHMARK(BM_ForwardProtocol);

static void BM_BuildMatchingGadget(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const auto inst = sample_random_intersect_sc(k, 4, 1.5 / static_cast<double>(k), rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_matching_gadget(inst));
}
BENCHMARK(BM_BuildMatchingGadget)->Arg(16)->Arg(256);

static void BM_HopcroftKarp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  const auto g = build_matching_gadget(sample_random_intersect_sc(k, 4, 1.5 / static_cast<double>(k), rng));
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching_size(g));
}
BENCHMARK(BM_HopcroftKarp)->Arg(16)->Arg(256);

static void BM_Streaming(benchmark::State& state) {
  static const char* const kNames[] = {"bidir-bfs", "forward-bfs", "union-find", "directed-frontier"};
  const char* name = kNames[state.range(0)];
  Rng rng(6);
  const auto inst = sample_random_intersect_sc(256, 4, 1.5 / 256, rng);
  const auto g = std::string_view(name) == "directed-frontier" ? build_reachability_gadget(inst)
                                                               : build_distance_gadget(inst);
  const auto meta = metadata_of(g);
  state.SetLabel(name);
  for (auto _ : state) {
    auto alg = make_algorithm(name, meta);
    benchmark::DoNotOptimize(run_streaming(*alg, g, 64));
  }
}
BENCHMARK(BM_Streaming)->DenseRange(0, 3);
BENCHMARK_MAIN();
