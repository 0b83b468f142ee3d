#include "dcospan/finset.hpp"

#include <numeric>
#include <stdexcept>

namespace dcospan {

FinSet::FinSet(std::uint32_t size) : size_(size) {
  if (size > kMaxSize) throw std::length_error("finite set larger than 2^16");
}

FinFunction::FinFunction(FinSet dom, FinSet cod,
                         std::vector<std::uint32_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw std::invalid_argument("function table length != domain size");
  for (std::uint32_t v : table_)
    if (v >= cod_.size())
      throw std::invalid_argument("function value outside codomain");
}

bool FinFunction::isBijection() const {
  if (dom_ != cod_) return false;
  std::vector<bool> hit(cod_.size(), false);
  for (std::uint32_t v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FinFunction identity(FinSet a) {
  std::vector<std::uint32_t> t(a.size());
  std::iota(t.begin(), t.end(), 0u);
  return FinFunction(a, a, std::move(t));
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("compose: middle objects differ");
  std::vector<std::uint32_t> t(f.dom().size());
  for (std::uint32_t x = 0; x < f.dom().size(); ++x) t[x] = g(f(x));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

CoproductResult coproduct(FinSet a, FinSet b) {
  FinSet sum(a.size() + b.size());
  return {sum, inl(a, b), inr(a, b)};
}

FinFunction inl(FinSet a, FinSet b) {
  FinSet sum(a.size() + b.size());
  std::vector<std::uint32_t> t(a.size());
  std::iota(t.begin(), t.end(), 0u);
  return FinFunction(a, sum, std::move(t));
}

FinFunction inr(FinSet a, FinSet b) {
  FinSet sum(a.size() + b.size());
  std::vector<std::uint32_t> t(b.size());
  std::iota(t.begin(), t.end(), a.size());
  return FinFunction(b, sum, std::move(t));
}

FinFunction copair(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod())
    throw std::invalid_argument("copair: codomains differ");
  FinSet dom(f.dom().size() + g.dom().size());
  std::vector<std::uint32_t> t;
  t.reserve(dom.size());
  t.insert(t.end(), f.table().begin(), f.table().end());
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFunction(dom, f.cod(), std::move(t));
}

FinFunction sumMap(const FinFunction& f, const FinFunction& g) {
  FinSet dom(f.dom().size() + g.dom().size());
  FinSet cod(f.cod().size() + g.cod().size());
  std::vector<std::uint32_t> t;
  t.reserve(dom.size());
  for (std::uint32_t v : f.table()) t.push_back(v);
  for (std::uint32_t v : g.table()) t.push_back(f.cod().size() + v);
  return FinFunction(dom, cod, std::move(t));
}

FinFunction bang(FinSet a) { return FinFunction(FinSet(0), a, {}); }

FinFunction braidingMap(FinSet a, FinSet b) {
  FinSet both(a.size() + b.size());
  std::vector<std::uint32_t> t(both.size());
  for (std::uint32_t k = 0; k < both.size(); ++k)
    t[k] = k < a.size() ? b.size() + k : k - a.size();
  return FinFunction(both, both, std::move(t));
}

FinFunction inverse(const FinFunction& f) {
  if (!f.isBijection())
    throw std::invalid_argument("inverse: function is not a bijection");
  std::vector<std::uint32_t> t(f.dom().size());
  for (std::uint32_t x = 0; x < f.dom().size(); ++x) t[f(x)] = x;
  return FinFunction(f.cod(), f.dom(), std::move(t));
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller index as root so roots double as minimum
  // representatives.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

}  // namespace

PushoutResult pushout(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom())
    throw std::invalid_argument("pushout: shared foot mismatch");
  const std::uint32_t n = f.cod().size();
  const std::uint32_t m = g.cod().size();
  UnionFind uf(n + m);
  for (std::uint32_t y = 0; y < f.dom().size(); ++y) uf.unite(f(y), n + g(y));

  // Number classes by increasing minimum representative.
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> classOf(n + m, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> all(n + m);
  for (std::uint32_t e = 0; e < n + m; ++e) {
    const std::uint32_t root = uf.find(e);
    if (classOf[root] == kUnset) classOf[root] = next++;
    all[e] = classOf[root];
  }
  FinSet apex(next);
  std::vector<std::uint32_t> lt(all.begin(), all.begin() + n);
  std::vector<std::uint32_t> rt(all.begin() + n, all.end());
  return {apex, FinFunction(f.cod(), apex, std::move(lt)),
          FinFunction(g.cod(), apex, std::move(rt))};
}

}  // namespace dcospan
