#pragma once

#include <cstdint>
#include <vector>

namespace dcospan {

// Skeletal finite sets: an object is {0, ..., size-1}. Sizes are capped at
// 2^16 by validation so downstream algorithms stay at desk scale with clean
// errors instead of address-space surprises.
class FinSet {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  FinSet() = default;
  explicit FinSet(std::uint32_t size);

  std::uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.size_ == b.size_;
  }
  friend bool operator!=(const FinSet& a, const FinSet& b) {
    return !(a == b);
  }

 private:
  std::uint32_t size_ = 0;
};

// A total function between finite sets, stored as its full value table.
class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<std::uint32_t> table);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }

  bool isBijection() const;

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }
  friend bool operator!=(const FinFunction& a, const FinFunction& b) {
    return !(a == b);
  }

 private:
  FinSet dom_, cod_;
  std::vector<std::uint32_t> table_;
};

FinFunction identity(FinSet a);

// g after f; requires f.cod == g.dom.
FinFunction compose(const FinFunction& g, const FinFunction& f);

struct CoproductResult {
  FinSet set;
  FinFunction inl;
  FinFunction inr;
};

CoproductResult coproduct(FinSet a, FinSet b);
FinFunction inl(FinSet a, FinSet b);
FinFunction inr(FinSet a, FinSet b);

// [f, g]: dom(f) + dom(g) -> common codomain.
FinFunction copair(const FinFunction& f, const FinFunction& g);

// f + g acting blockwise on the coproducts of domains and codomains.
FinFunction sumMap(const FinFunction& f, const FinFunction& g);

// The unique map from the empty set.
FinFunction bang(FinSet a);

// The block swap a + b -> b + a.
FinFunction braidingMap(FinSet a, FinSet b);

// Inverse of a bijection; requires isBijection().
FinFunction inverse(const FinFunction& f);

struct PushoutResult {
  FinSet apex;
  FinFunction left;   // N -> apex
  FinFunction right;  // M -> apex
};

// Pushout of the span f: Y -> N, g: Y -> M, computed as the quotient of
// N + M by the equivalence generated by f(y) ~ g(y) (union-find). Classes
// are numbered in increasing order of their minimum representative inside
// N + M, which makes the result canonical and serialization byte-stable.
PushoutResult pushout(const FinFunction& f, const FinFunction& g);

}  // namespace dcospan
