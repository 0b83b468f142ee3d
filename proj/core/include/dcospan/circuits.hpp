#pragma once

#include <vector>

#include "dcospan/decorated.hpp"
#include "dcospan/graph.hpp"
#include "dcospan/matrix.hpp"
#include "dcospan/subspace.hpp"

namespace dcospan {

// A graph-decorated cospan read as an open resistor network: edge labels are
// resistances, the feet are terminals.
using CircuitCospan = DecoratedCospan<GraphFunctor>;

// Q(psi) = sum over edges of (1/r)(psi(tgt) - psi(src))^2.
Rat power(const LabeledGraph& g, const std::vector<Rat>& psi);

// Gradient of Q, accumulated edge by edge; equals 2 L phi (no 1/2 in Q, so
// none here). Component n is the net current outflow at node n.
std::vector<Rat> gradPower(const LabeledGraph& g, const std::vector<Rat>& phi);

// Conductance-weighted graph Laplacian: symmetric, zero row sums; self-loops
// contribute nothing.
Matrix laplacian(const LabeledGraph& g);

// The subspace {(phi, 2 L phi)} of Q^(2N): every potential paired with the
// node currents it induces. This is the semantic decoration of a resistor
// network, and a monoidal natural transformation from graphs to subspaces.
Subspace resComponent(const LabeledGraph& g);

struct ResTransformation {
  using Source = GraphFunctor;
  using Target = LinSubFunctor;

  Subspace component(FinSet x, const LabeledGraph& g) const;
};

// Black-boxing: the boundary potential/current pairs extendable to a full
// apex state that obeys Ohm's law everywhere and Kirchhoff current balance
// at every node the boundary cannot reach. Lives on footLeft + footRight
// with the usual (all phi, then all kappa) coordinate order.
Subspace behavior(const CircuitCospan& d);

// Same subspace computed without cospans or decorations: split nodes into
// boundary and interior, eliminate the interior by a Schur complement of
// 2L (falling back to a kernel computation when boundary-disconnected
// components make the interior block singular), then spread each node
// current over the boundary legs that share it.
Subspace oracleNodal(const LabeledGraph& g, const FinFunction& boundary);

// Same feet and equal behaviors.
bool behaviorEquivalent(const CircuitCospan& d1, const CircuitCospan& d2);

}  // namespace dcospan
