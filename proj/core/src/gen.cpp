#include "dcospan/gen.hpp"

#include <algorithm>
#include <sstream>

namespace dcospan {

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 round over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint32_t randBelow(Rng& rng, std::uint32_t n) {
  // Modulo bias is irrelevant for test-case sampling and keeps the stream
  // platform-stable.
  return n == 0 ? 0 : static_cast<std::uint32_t>(rng() % n);
}

FinSet randomFinSet(Rng& rng, std::uint32_t maxSize) {
  return FinSet(randBelow(rng, maxSize + 1));
}

FinFunction randomFinFunction(Rng& rng, FinSet dom, FinSet cod) {
  if (cod.empty() && !dom.empty())
    throw std::invalid_argument("no functions into the empty set");
  std::vector<std::uint32_t> t(dom.size());
  for (std::uint32_t& v : t) v = randBelow(rng, cod.size());
  return FinFunction(dom, cod, std::move(t));
}

FinFunction randomPermutation(Rng& rng, FinSet x) {
  std::vector<std::uint32_t> t(x.size());
  for (std::uint32_t i = 0; i < x.size(); ++i) t[i] = i;
  for (std::uint32_t i = x.size(); i > 1; --i)
    std::swap(t[i - 1], t[randBelow(rng, i)]);
  return FinFunction(x, x, std::move(t));
}

Cospan randomCospan(Rng& rng, FinSet left, FinSet right,
                    std::uint32_t maxApex) {
  const std::uint32_t minApex = (left.empty() && right.empty()) ? 0 : 1;
  const std::uint32_t span = maxApex >= minApex ? maxApex - minApex : 0;
  FinSet apex(minApex + randBelow(rng, span + 1));
  return makeCospan(left, right, apex, randomFinFunction(rng, left, apex),
                    randomFinFunction(rng, right, apex));
}

LabeledGraph randomGraph(Rng& rng, FinSet vertices, std::uint32_t maxEdges) {
  std::vector<LabeledGraph::Edge> edges;
  if (!vertices.empty()) {
    const std::uint32_t count = randBelow(rng, maxEdges + 1);
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t src = randBelow(rng, vertices.size());
      const std::uint32_t tgt = randBelow(rng, vertices.size());
      const Rat label(1 + randBelow(rng, 6), 1 + randBelow(rng, 4));
      edges.push_back({src, tgt, label});
    }
  }
  return LabeledGraph(vertices, std::move(edges));
}

Subspace randomSubspace(Rng& rng, FinSet onSet, std::uint32_t maxGenerators) {
  const std::size_t ambient = 2 * static_cast<std::size_t>(onSet.size());
  const std::uint32_t count = randBelow(rng, maxGenerators + 1);
  Matrix gens(count, ambient);
  for (std::uint32_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      gens.at(i, j) = Rat(static_cast<long>(randBelow(rng, 7)) - 3);
  return Subspace::fromGenerators(gens, ambient);
}

std::vector<Rat> randomVector(Rng& rng, std::size_t len) {
  std::vector<Rat> v(len);
  for (Rat& x : v)
    x = Rat(static_cast<long>(randBelow(rng, 11)) - 5,
            1 + randBelow(rng, 3));
  return v;
}

std::string showFunction(const FinFunction& f) {
  std::ostringstream os;
  os << f.dom().size() << "->" << f.cod().size() << " [";
  for (std::size_t i = 0; i < f.table().size(); ++i)
    os << (i ? "," : "") << f.table()[i];
  os << "]";
  return os.str();
}

std::string showGraph(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph(" << g.vertices().size() << "; ";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    os << (i ? " " : "") << e.src << "-" << e.label.str() << "->" << e.tgt;
  }
  os << ")";
  return os.str();
}

std::string showSubspace(const Subspace& s) {
  std::ostringstream os;
  os << "subspace(ambient " << s.ambient() << "; rows";
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    os << " [";
    for (std::size_t j = 0; j < s.ambient(); ++j)
      os << (j ? "," : "") << s.basis().at(i, j).str();
    os << "]";
  }
  os << ")";
  return os.str();
}

std::vector<LabeledGraph> GraphGen::shrink(const LabeledGraph& d) const {
  std::vector<LabeledGraph> out;
  for (std::size_t i = 0; i < d.edges().size(); ++i) {
    std::vector<LabeledGraph::Edge> fewer = d.edges();
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(d.vertices(), std::move(fewer));
  }
  return out;
}

std::vector<Subspace> LinSubGen::shrink(const Subspace& d) const {
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    Matrix fewer(d.dimension() - 1, d.ambient());
    std::size_t r = 0;
    for (std::size_t row = 0; row < d.dimension(); ++row) {
      if (row == i) continue;
      for (std::size_t c = 0; c < d.ambient(); ++c)
        fewer.at(r, c) = d.basis().at(row, c);
      ++r;
    }
    out.push_back(Subspace::fromGenerators(fewer, d.ambient()));
  }
  return out;
}

}  // namespace dcospan
