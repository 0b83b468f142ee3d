#pragma once

#include <cstdint>
#include <vector>

#include "dcospan/finset.hpp"
#include "dcospan/rational.hpp"

namespace dcospan {

// Directed multigraph on a skeletal vertex set, with positive rational edge
// labels (resistances downstream). Edges are kept sorted by (src, tgt,
// label) so equal multisets have equal representations; self-loops and
// parallel edges are allowed.
class LabeledGraph {
 public:
  struct Edge {
    std::uint32_t src, tgt;
    Rat label;

    friend bool operator==(const Edge& a, const Edge& b) {
      return a.src == b.src && a.tgt == b.tgt && a.label == b.label;
    }
  };

  LabeledGraph() = default;
  LabeledGraph(FinSet vertices, std::vector<Edge> edges);

  const FinSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const LabeledGraph& a, const LabeledGraph& b) {
    return !(a == b);
  }

 private:
  FinSet vertices_;
  std::vector<Edge> edges_;
};

// Pushforward along f: endpoints are relabeled, edges and labels survive
// unchanged.
LabeledGraph graphMap(const FinFunction& f, const LabeledGraph& g);

// Disjoint union; the second graph's vertices are shifted past the first's.
LabeledGraph graphTensor(const LabeledGraph& g1, const LabeledGraph& g2);

LabeledGraph unitGraph();

// Multiset equality of edges over a shared vertex set.
bool graphEqual(const LabeledGraph& g1, const LabeledGraph& g2);

// Decoration functor instance: finite set N carries the labelled graphs on
// N's elements.
struct GraphFunctor {
  using Decoration = LabeledGraph;

  bool valid(FinSet x, const Decoration& d) const {
    return d.vertices() == x;
  }
  Decoration mapAlong(const FinFunction& f, const Decoration& d) const {
    return graphMap(f, d);
  }
  Decoration tensor(const Decoration& a, const Decoration& b) const {
    return graphTensor(a, b);
  }
  Decoration unit() const { return unitGraph(); }
  bool equal(const Decoration& a, const Decoration& b) const {
    return graphEqual(a, b);
  }
};

}  // namespace dcospan
