#include "dcospan/circuits.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcospan {

Rat power(const LabeledGraph& g, const std::vector<Rat>& psi) {
  if (psi.size() != g.vertices().size())
    throw std::invalid_argument("power: potential length mismatch");
  Rat total;
  for (const auto& e : g.edges()) {
    const Rat drop = psi[e.tgt] - psi[e.src];
    total += drop * drop * e.label.reciprocal();
  }
  return total;
}

std::vector<Rat> gradPower(const LabeledGraph& g,
                           const std::vector<Rat>& phi) {
  if (phi.size() != g.vertices().size())
    throw std::invalid_argument("gradPower: potential length mismatch");
  std::vector<Rat> out(phi.size());
  for (const auto& e : g.edges()) {
    const Rat flow = Rat(2) * e.label.reciprocal() * (phi[e.tgt] - phi[e.src]);
    out[e.tgt] += flow;
    out[e.src] -= flow;
  }
  return out;
}

Matrix laplacian(const LabeledGraph& g) {
  const std::size_t n = g.vertices().size();
  Matrix l(n, n);
  for (const auto& e : g.edges()) {
    if (e.src == e.tgt) continue;  // (e_s - e_t) vanishes on self-loops
    const Rat w = e.label.reciprocal();
    l.at(e.src, e.src) += w;
    l.at(e.tgt, e.tgt) += w;
    l.at(e.src, e.tgt) -= w;
    l.at(e.tgt, e.src) -= w;
  }
  return l;
}

Subspace resComponent(const LabeledGraph& g) {
  const std::size_t n = g.vertices().size();
  Matrix l = laplacian(g);
  Matrix rows(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.at(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) rows.at(i, n + j) = Rat(2) * l.at(i, j);
  }
  // rows is already reduced (pivots are the phi block), but fromGenerators
  // re-canonicalizes anyway, keeping this definitionally safe.
  return Subspace::fromGenerators(rows, 2 * n);
}

Subspace ResTransformation::component(FinSet x, const LabeledGraph& g) const {
  if (g.vertices() != x)
    throw std::invalid_argument("resComponent: vertex set mismatch");
  return resComponent(g);
}

Subspace behavior(const CircuitCospan& d) {
  const FinFunction h = copair(d.shape.legLeft, d.shape.legRight);
  const std::size_t b = h.dom().size();
  const std::size_t n = h.cod().size();
  const Matrix a = laplacian(d.decoration);  // currents are 2 a phi

  // Variables: phi on the boundary (b), kappa on the boundary (b), psi on
  // the apex (n). Constraints: boundary potentials restrict the apex
  // potential, and apex node currents are exactly what the boundary legs
  // deliver (zero at interior nodes).
  Matrix sys(b + n, 2 * b + n);
  for (std::size_t w = 0; w < b; ++w) {
    sys.at(w, w) = 1;
    sys.at(w, 2 * b + h(static_cast<std::uint32_t>(w))) -= 1;
  }
  for (std::size_t node = 0; node < n; ++node)
    for (std::size_t m = 0; m < n; ++m)
      sys.at(b + node, 2 * b + m) = Rat(-2) * a.at(node, m);
  for (std::size_t w = 0; w < b; ++w)
    sys.at(b + h(static_cast<std::uint32_t>(w)), b + w) += 1;

  std::vector<std::size_t> keep(2 * b);
  for (std::size_t i = 0; i < 2 * b; ++i) keep[i] = i;
  return eliminateAndProject(sys, keep);
}

namespace {

struct BoundarySplit {
  std::vector<std::uint32_t> boundaryNodes;          // sorted
  std::vector<std::uint32_t> interiorNodes;          // sorted
  std::vector<std::vector<std::uint32_t>> legsOf;    // per boundary node
};

BoundarySplit splitNodes(std::uint32_t n, const FinFunction& boundary) {
  std::vector<std::vector<std::uint32_t>> legs(n);
  for (std::uint32_t w = 0; w < boundary.dom().size(); ++w)
    legs[boundary(w)].push_back(w);
  BoundarySplit out;
  for (std::uint32_t node = 0; node < n; ++node) {
    if (legs[node].empty()) {
      out.interiorNodes.push_back(node);
    } else {
      out.boundaryNodes.push_back(node);
      out.legsOf.push_back(legs[node]);
    }
  }
  return out;
}

Matrix pick(const Matrix& a, const std::vector<std::uint32_t>& rows,
            const std::vector<std::uint32_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(i, j) = a.at(rows[i], cols[j]);
  return out;
}

}  // namespace

Subspace oracleNodal(const LabeledGraph& g, const FinFunction& boundary) {
  if (boundary.cod() != g.vertices())
    throw std::invalid_argument("oracleNodal: boundary maps elsewhere");
  const std::uint32_t n = g.vertices().size();
  const std::size_t b = boundary.dom().size();
  Matrix a = laplacian(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) *= Rat(2);

  const BoundarySplit split = splitNodes(n, boundary);
  const std::size_t nb = split.boundaryNodes.size();

  Matrix gens(0, 2 * b);

  auto emit = [&](const std::vector<Rat>& phiNodes,
                  const std::vector<Rat>& currentNodes) {
    // phiNodes/currentNodes are indexed by boundary-node position; the
    // full node current lands on the least leg of each terminal class.
    std::vector<Rat> row(2 * b);
    for (std::size_t k = 0; k < nb; ++k) {
      for (std::uint32_t leg : split.legsOf[k]) row[leg] = phiNodes[k];
      row[b + split.legsOf[k].front()] = currentNodes[k];
    }
    gens.appendRow(row);
  };

  const Matrix aII = pick(a, split.interiorNodes, split.interiorNodes);
  const Matrix aIB = pick(a, split.interiorNodes, split.boundaryNodes);
  const std::optional<Matrix> lift = solveExact(aII, aIB);
  if (lift) {
    // Interior eliminated: with boundary potentials p, the interior settles
    // at -aII^(-1) aIB p and the boundary currents are the Schur complement
    // S p.
    const Matrix aBB = pick(a, split.boundaryNodes, split.boundaryNodes);
    const Matrix aBI = pick(a, split.boundaryNodes, split.interiorNodes);
    Matrix schur = aBB;
    const Matrix correction = multiply(aBI, *lift);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        schur.at(i, j) -= correction.at(i, j);
    for (std::size_t k = 0; k < nb; ++k) {
      std::vector<Rat> phiNodes(nb), currentNodes(nb);
      phiNodes[k] = 1;
      for (std::size_t j = 0; j < nb; ++j) currentNodes[j] = schur.at(j, k);
      emit(phiNodes, currentNodes);
    }
  } else {
    // Boundary-disconnected components leave the interior block singular;
    // fall back to solving the interior balance equations outright.
    const Matrix interiorRows = pick(a, split.interiorNodes, [&] {
      std::vector<std::uint32_t> all(n);
      for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
      return all;
    }());
    const Matrix solutions = kernelBasis(interiorRows);
    for (std::size_t s = 0; s < solutions.rows(); ++s) {
      std::vector<Rat> psi(n);
      for (std::size_t j = 0; j < n; ++j) psi[j] = solutions.at(s, j);
      std::vector<Rat> phiNodes(nb), currentNodes(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        phiNodes[k] = psi[split.boundaryNodes[k]];
        for (std::size_t j = 0; j < n; ++j)
          currentNodes[k] += a.at(split.boundaryNodes[k], j) * psi[j];
      }
      emit(phiNodes, currentNodes);
    }
  }

  // Currents may split arbitrarily among legs sharing a terminal; only the
  // per-terminal sum is pinned down.
  for (std::size_t k = 0; k < nb; ++k) {
    const auto& legs = split.legsOf[k];
    for (std::size_t j = 1; j < legs.size(); ++j) {
      std::vector<Rat> row(2 * b);
      row[b + legs[j]] = 1;
      row[b + legs.front()] = -1;
      gens.appendRow(row);
    }
  }
  return Subspace::fromGenerators(gens, 2 * b);
}

bool behaviorEquivalent(const CircuitCospan& d1, const CircuitCospan& d2) {
  if (d1.shape.footLeft != d2.shape.footLeft ||
      d1.shape.footRight != d2.shape.footRight)
    throw std::invalid_argument("behaviorEquivalent: feet differ");
  return subspaceEqual(behavior(d1), behavior(d2));
}

}  // namespace dcospan
