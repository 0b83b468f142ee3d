#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "dcospan/circuits.hpp"
#include "dcospan/decorated.hpp"
#include "dcospan/gen.hpp"

using namespace dcospan;

namespace {

const GraphFunctor kGraphs{};

CircuitCospan randomCircuit(Rng& rng, std::uint32_t feet, std::uint32_t apex,
                            std::uint32_t edges) {
  const Cospan shape =
      randomCospan(rng, FinSet(feet), FinSet(feet), apex);
  return {shape, randomGraph(rng, shape.apex, edges)};
}

// A ladder: 2n nodes in two rails, unit rungs, boundary at the left ends.
CircuitCospan ladder(std::uint32_t rungs) {
  const std::uint32_t n = 2 * rungs;
  std::vector<LabeledGraph::Edge> edges;
  for (std::uint32_t i = 0; i + 1 < rungs; ++i) {
    edges.push_back({2 * i, 2 * (i + 1), Rat(1)});
    edges.push_back({2 * i + 1, 2 * (i + 1) + 1, Rat(1)});
  }
  for (std::uint32_t i = 0; i < rungs; ++i)
    edges.push_back({2 * i, 2 * i + 1, Rat(2)});
  Cospan shape = makeCospan(FinSet(1), FinSet(1), FinSet(n),
                            FinFunction(FinSet(1), FinSet(n), {0}),
                            FinFunction(FinSet(1), FinSet(n), {1}));
  return {std::move(shape), LabeledGraph(FinSet(n), std::move(edges))};
}

void BM_ComposeDecorated(benchmark::State& state) {
  Rng rng(1);
  const auto apex = static_cast<std::uint32_t>(state.range(0));
  const CircuitCospan a = randomCircuit(rng, 3, apex, 2 * apex);
  const CircuitCospan b = randomCircuit(rng, 3, apex, 2 * apex);
  for (auto _ : state)
    benchmark::DoNotOptimize(composeDecorated(kGraphs, a, b));
}
BENCHMARK(BM_ComposeDecorated)->Arg(8)->Arg(32)->Arg(128);

void BM_Behavior(benchmark::State& state) {
  const CircuitCospan d = ladder(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(behavior(d));
}
BENCHMARK(BM_Behavior)->Arg(4)->Arg(8)->Arg(16);

void BM_RowReduce(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::vector<Rat> row = randomVector(rng, n);
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = row[c];
  }
  for (auto _ : state) benchmark::DoNotOptimize(rowReduce(m));
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(32);

void BM_IsoSearch(benchmark::State& state) {
  Rng rng(3);
  const auto apex = static_cast<std::uint32_t>(state.range(0));
  const Cospan c = randomCospan(rng, FinSet(2), FinSet(2), apex);
  const FinFunction p = randomPermutation(rng, c.apex);
  const Cospan relabeled = makeCospan(c.footLeft, c.footRight, c.apex,
                                      compose(p, c.legLeft),
                                      compose(p, c.legRight));
  for (auto _ : state) benchmark::DoNotOptimize(isoSearch(c, relabeled));
}
BENCHMARK(BM_IsoSearch)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
