#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dcospan/cospan.hpp"
#include "dcospan/finset.hpp"
#include "dcospan/graph.hpp"
#include "dcospan/subspace.hpp"

namespace dcospan {

// mt19937_64 raw output is specified bit-for-bit by the standard, unlike the
// distribution adaptors, so all sampling goes through randBelow to keep
// seeded runs identical across platforms.
using Rng = std::mt19937_64;

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream);

std::uint32_t randBelow(Rng& rng, std::uint32_t n);  // uniform-ish in [0, n)

FinSet randomFinSet(Rng& rng, std::uint32_t maxSize);
FinFunction randomFinFunction(Rng& rng, FinSet dom, FinSet cod);
FinFunction randomPermutation(Rng& rng, FinSet x);
Cospan randomCospan(Rng& rng, FinSet left, FinSet right,
                    std::uint32_t maxApex);

LabeledGraph randomGraph(Rng& rng, FinSet vertices, std::uint32_t maxEdges);
Subspace randomSubspace(Rng& rng, FinSet onSet, std::uint32_t maxGenerators);
std::vector<Rat> randomVector(Rng& rng, std::size_t len);

std::string showFunction(const FinFunction& f);
std::string showGraph(const LabeledGraph& g);
std::string showSubspace(const Subspace& s);

// Decoration generators bundle sampling, one-step shrinking, display, and a
// size measure; the law harness is generic over this shape.
struct GraphGen {
  using Decoration = LabeledGraph;
  std::uint32_t maxEdges = 8;

  Decoration decoration(Rng& rng, FinSet x) const {
    return randomGraph(rng, x, maxEdges);
  }
  std::vector<Decoration> shrink(const Decoration& d) const;
  std::string show(const Decoration& d) const { return showGraph(d); }
  std::size_t size(const Decoration& d) const { return d.edges().size(); }
};

struct LinSubGen {
  using Decoration = Subspace;
  std::uint32_t maxGenerators = 4;

  Decoration decoration(Rng& rng, FinSet x) const {
    return randomSubspace(rng, x, maxGenerators);
  }
  std::vector<Decoration> shrink(const Decoration& d) const;
  std::string show(const Decoration& d) const { return showSubspace(d); }
  std::size_t size(const Decoration& d) const { return d.dimension(); }
};

// Decorations of the plain-cospan agreement instance carry no information;
// nothing to sample or shrink.
struct UnitGen {
  using Decoration = FinFunction;

  Decoration decoration(Rng&, FinSet x) const { return bang(x); }
  std::vector<Decoration> shrink(const Decoration&) const { return {}; }
  std::string show(const Decoration& d) const { return showFunction(d); }
  std::size_t size(const Decoration&) const { return 0; }
};

}  // namespace dcospan
