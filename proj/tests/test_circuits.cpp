#include <vector>

#include "dcospan/circuits.hpp"
#include "dcospan/gen.hpp"
#include "doctest.h"

using namespace dcospan;

namespace {

const GraphFunctor kGraphs{};

CircuitCospan circuit(std::uint32_t feetLeft, std::uint32_t feetRight,
                      std::uint32_t apex, std::vector<std::uint32_t> legLeft,
                      std::vector<std::uint32_t> legRight,
                      std::vector<LabeledGraph::Edge> edges) {
  Cospan shape = makeCospan(
      FinSet(feetLeft), FinSet(feetRight), FinSet(apex),
      FinFunction(FinSet(feetLeft), FinSet(apex), std::move(legLeft)),
      FinFunction(FinSet(feetRight), FinSet(apex), std::move(legRight)));
  return makeDecorated(kGraphs, std::move(shape),
                       LabeledGraph(FinSet(apex), std::move(edges)));
}

CircuitCospan singleEdge(const Rat& r) {
  return circuit(1, 1, 2, {0}, {1}, {{0, 1, r}});
}

Subspace span(std::vector<std::vector<Rat>> rows, std::size_t ambient) {
  return Subspace::fromGenerators(Matrix::fromRows(std::move(rows), ambient),
                                  ambient);
}

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("dissipated power of the worked example") {
  const LabeledGraph g(FinSet(3), {{0, 1, Rat(13, 10)},
                                   {0, 2, Rat(4, 5)},
                                   {1, 0, Rat(1, 5)},
                                   {2, 1, Rat(2)}});
  CHECK(power(g, {Rat(1), Rat(0), Rat(0)}) == Rat(365, 52));
  CHECK(power(g, {Rat(5), Rat(5), Rat(5)}) == Rat(0));
}

TEST_CASE("power is blind to self-loops and gradPower is its derivative") {
  const LabeledGraph loop(FinSet(1), {{0, 0, Rat(3)}});
  CHECK(power(loop, {Rat(17)}) == Rat(0));
  CHECK(laplacian(loop) == Matrix(1, 1));

  Rng rng(701);
  for (int i = 0; i < 100; ++i) {
    const FinSet n = randomFinSet(rng, 5);
    const LabeledGraph g = randomGraph(rng, n, 7);
    const std::vector<Rat> phi = randomVector(rng, n.size());
    const std::vector<Rat> h = randomVector(rng, n.size());
    std::vector<Rat> sum(n.size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = phi[k] + h[k];
    // Quadratic expansion: Q(phi+h) - Q(phi) = grad Q(phi) . h + Q(h).
    Rat dot(0);
    const std::vector<Rat> grad = gradPower(g, phi);
    for (std::size_t k = 0; k < sum.size(); ++k) dot += grad[k] * h[k];
    CHECK(power(g, sum) - power(g, phi) == dot + power(g, h));
    // And the gradient is twice the laplacian action.
    const Matrix l = laplacian(g);
    for (std::size_t r = 0; r < n.size(); ++r) {
      Rat lphi(0);
      for (std::size_t c = 0; c < n.size(); ++c) lphi += l.at(r, c) * phi[c];
      CHECK(grad[r] == Rat(2) * lphi);
    }
  }
}

TEST_CASE("laplacian fixtures") {
  const LabeledGraph edge(FinSet(2), {{0, 1, Rat(4)}});
  CHECK(laplacian(edge) ==
        Matrix::fromRows({{Rat(1, 4), Rat(-1, 4)},
                          {Rat(-1, 4), Rat(1, 4)}}, 2));
  const LabeledGraph triangle(FinSet(3), {{0, 1, Rat(1)},
                                          {0, 2, Rat(1)},
                                          {1, 2, Rat(1)}});
  CHECK(laplacian(triangle) ==
        Matrix::fromRows({{Rat(2), Rat(-1), Rat(-1)},
                          {Rat(-1), Rat(2), Rat(-1)},
                          {Rat(-1), Rat(-1), Rat(2)}}, 3));
}

TEST_CASE("resComponent pairs potentials with their induced currents") {
  const LabeledGraph edge(FinSet(2), {{0, 1, Rat(2)}});
  CHECK(subspaceEqual(resComponent(edge),
                      span({{Rat(1), Rat(0), Rat(1), Rat(-1)},
                            {Rat(0), Rat(1), Rat(-1), Rat(1)}}, 4)));
  // No edges: potentials free, currents pinned to zero.
  CHECK(subspaceEqual(resComponent(LabeledGraph(FinSet(1), {})),
                      span({{Rat(1), Rat(0)}}, 2)));
  CHECK(ResTransformation{}.component(FinSet(2), edge) ==
        resComponent(edge));
}

TEST_CASE("behavior of the perfectly conductive wire") {
  const CircuitCospan wire = circuit(1, 1, 1, {0}, {0}, {});
  CHECK(subspaceEqual(behavior(wire),
                      span({{Rat(1), Rat(1), Rat(0), Rat(0)},
                            {Rat(0), Rat(0), Rat(1), Rat(-1)}}, 4)));
}

TEST_CASE("behavior of a single edge implements Ohm's law with the 2L factor") {
  const Rat r(5, 3);
  const Rat c = Rat(2) / r;
  CHECK(subspaceEqual(behavior(singleEdge(r)),
                      span({{Rat(1), Rat(0), c, -c},
                            {Rat(0), Rat(1), -c, c}}, 4)));
}

TEST_CASE("series, parallel, and triangle reductions") {
  const CircuitCospan series =
      circuit(1, 1, 3, {0}, {2}, {{0, 1, Rat(1)}, {1, 2, Rat(2)}});
  CHECK(behaviorEquivalent(series, singleEdge(Rat(3))));

  const CircuitCospan parallel =
      circuit(1, 1, 2, {0}, {1}, {{0, 1, Rat(1)}, {0, 1, Rat(1)}});
  CHECK(behaviorEquivalent(parallel, singleEdge(Rat(1, 2))));

  const CircuitCospan triangle =
      circuit(1, 1, 3, {0}, {1},
              {{0, 1, Rat(1)}, {0, 2, Rat(1)}, {1, 2, Rat(1)}});
  CHECK(behaviorEquivalent(triangle, singleEdge(Rat(2, 3))));

  CHECK(!behaviorEquivalent(singleEdge(Rat(1)), singleEdge(Rat(2))));
  CHECK_THROWS_AS(behaviorEquivalent(series, circuit(1, 0, 1, {0}, {}, {})),
                  std::invalid_argument);
}

TEST_CASE("interior components the boundary cannot reach are averaged away") {
  // Node 0 is the whole boundary; nodes 1 and 2 form a floating component.
  const CircuitCospan floating =
      circuit(1, 0, 3, {0}, {}, {{1, 2, Rat(1)}});
  const Subspace want = span({{Rat(1), Rat(0)}}, 2);
  CHECK(subspaceEqual(behavior(floating), want));
  CHECK(subspaceEqual(
      oracleNodal(floating.decoration, floating.shape.legLeft), want));
  // Fully disconnected interior, same story.
  const CircuitCospan isolated = circuit(1, 0, 2, {0}, {}, {});
  CHECK(subspaceEqual(behavior(isolated), want));
}

TEST_CASE("behavior with an empty boundary collapses to the unit") {
  const CircuitCospan closed = circuit(0, 0, 2, {}, {}, {{0, 1, Rat(1)}});
  CHECK(behavior(closed) == subspaceUnit());
}

TEST_CASE("behavior matches the nodal oracle on random circuits") {
  Rng rng(702);
  for (int i = 0; i < 100; ++i) {
    const FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3);
    const Cospan shape = randomCospan(rng, x, y, 6);
    const CircuitCospan d = makeDecorated(
        kGraphs, shape, randomGraph(rng, shape.apex, 8));
    CHECK(subspaceEqual(behavior(d),
                        oracleNodal(d.decoration,
                                    copair(d.shape.legLeft,
                                           d.shape.legRight))));
  }
}

}  // TEST_SUITE("circuits")
