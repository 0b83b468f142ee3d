#include "dcospan/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcospan {

namespace {

bool edgeLess(const LabeledGraph::Edge& a, const LabeledGraph::Edge& b) {
  if (a.src != b.src) return a.src < b.src;
  if (a.tgt != b.tgt) return a.tgt < b.tgt;
  return a.label < b.label;
}

}  // namespace

LabeledGraph::LabeledGraph(FinSet vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.src >= vertices_.size() || e.tgt >= vertices_.size())
      throw std::invalid_argument("edge endpoint outside vertex set");
    if (!e.label.isPositive())
      throw std::invalid_argument("edge label must be positive");
  }
  std::sort(edges_.begin(), edges_.end(), edgeLess);
}

LabeledGraph graphMap(const FinFunction& f, const LabeledGraph& g) {
  if (g.vertices() != f.dom())
    throw std::invalid_argument("graphMap: vertex set is not the domain");
  std::vector<LabeledGraph::Edge> edges = g.edges();
  for (LabeledGraph::Edge& e : edges) {
    e.src = f(e.src);
    e.tgt = f(e.tgt);
  }
  return LabeledGraph(f.cod(), std::move(edges));
}

LabeledGraph graphTensor(const LabeledGraph& g1, const LabeledGraph& g2) {
  const std::uint32_t shift = g1.vertices().size();
  std::vector<LabeledGraph::Edge> edges = g1.edges();
  edges.reserve(edges.size() + g2.edges().size());
  for (LabeledGraph::Edge e : g2.edges()) {
    e.src += shift;
    e.tgt += shift;
    edges.push_back(std::move(e));
  }
  return LabeledGraph(FinSet(shift + g2.vertices().size()), std::move(edges));
}

LabeledGraph unitGraph() { return LabeledGraph(FinSet(0), {}); }

bool graphEqual(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.vertices() != g2.vertices())
    throw std::invalid_argument("graphEqual: vertex sets differ");
  return g1.edges() == g2.edges();
}

}  // namespace dcospan
