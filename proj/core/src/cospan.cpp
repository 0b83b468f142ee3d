#include "dcospan/cospan.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace dcospan {

Cospan makeCospan(FinSet left, FinSet right, FinSet apex, FinFunction legLeft,
                  FinFunction legRight) {
  if (legLeft.dom() != left || legLeft.cod() != apex ||
      legRight.dom() != right || legRight.cod() != apex)
    throw std::invalid_argument("cospan legs do not match feet/apex");
  return Cospan{left, right, apex, std::move(legLeft), std::move(legRight)};
}

Cospan fromFunction(const FinFunction& f) {
  return makeCospan(f.dom(), f.cod(), f.cod(), f, identity(f.cod()));
}

Cospan identityCospan(FinSet x) { return fromFunction(identity(x)); }

GluedCospan composeWithGlue(const Cospan& c1, const Cospan& c2) {
  if (c1.footRight != c2.footLeft)
    throw std::invalid_argument("compose: boundary feet differ");
  PushoutResult po = pushout(c1.legRight, c2.legLeft);
  Cospan out = makeCospan(c1.footLeft, c2.footRight, po.apex,
                          compose(po.left, c1.legLeft),
                          compose(po.right, c2.legRight));
  return {std::move(out), std::move(po.left), std::move(po.right)};
}

Cospan composeCospan(const Cospan& c1, const Cospan& c2) {
  return composeWithGlue(c1, c2).cospan;
}

Cospan tensorCospan(const Cospan& c1, const Cospan& c2) {
  FinSet left(c1.footLeft.size() + c2.footLeft.size());
  FinSet right(c1.footRight.size() + c2.footRight.size());
  return makeCospan(left, right,
                    FinSet(c1.apex.size() + c2.apex.size()),
                    sumMap(c1.legLeft, c2.legLeft),
                    sumMap(c1.legRight, c2.legRight));
}

Cospan opposite(const Cospan& c) {
  return Cospan{c.footRight, c.footLeft, c.apex, c.legRight, c.legLeft};
}

FrobeniusGenerators frobeniusGenerators(FinSet x) {
  const FinFunction fold = copair(identity(x), identity(x));
  Cospan merge = fromFunction(fold);
  Cospan create = fromFunction(bang(x));
  return {merge, create, opposite(merge), opposite(create)};
}

Cospan structureCospan(StructureKind kind, FinSet a, FinSet b, FinSet c) {
  switch (kind) {
    case StructureKind::Associator:
      return identityCospan(FinSet(a.size() + b.size() + c.size()));
    case StructureKind::LeftUnitor:
    case StructureKind::RightUnitor:
      return identityCospan(a);
    case StructureKind::Braiding:
      return fromFunction(braidingMap(a, b));
  }
  throw std::invalid_argument("unknown structure kind");
}

Cospan dual(const Cospan& c) {
  const FinSet x = c.footLeft;
  const FinSet y = c.footRight;
  const FrobeniusGenerators fx = frobeniusGenerators(x);
  const FrobeniusGenerators fy = frobeniusGenerators(y);
  const Cospan coev = composeCospan(fx.create, fx.split);  // 0 -> X+X
  const Cospan ev = composeCospan(fy.merge, fy.discard);   // Y+Y -> 0
  const Cospan step1 = tensorCospan(identityCospan(y), coev);
  const Cospan step2 =
      tensorCospan(identityCospan(y), tensorCospan(c, identityCospan(x)));
  const Cospan step3 = tensorCospan(ev, identityCospan(x));
  return composeCospan(composeCospan(step1, step2), step3);
}

namespace {

// Fiber signature of an apex element: every foot element that lands on it,
// tagged by which leg it came through. Distinct apex elements have disjoint
// nonempty signatures, so matching nonempty signatures forces the bijection.
using Signature = std::vector<std::pair<int, std::uint32_t>>;

std::vector<Signature> signaturesOf(const Cospan& c) {
  std::vector<Signature> sig(c.apex.size());
  for (std::uint32_t p = 0; p < c.footLeft.size(); ++p)
    sig[c.legLeft(p)].emplace_back(0, p);
  for (std::uint32_t q = 0; q < c.footRight.size(); ++q)
    sig[c.legRight(q)].emplace_back(1, q);
  return sig;
}

struct IsoSkeleton {
  // table[e] for leg-touched elements; kFree for the rest.
  static constexpr std::uint32_t kFree = 0xffffffffu;
  std::vector<std::uint32_t> forced;
  std::vector<std::uint32_t> freeSrc, freeDst;
};

std::optional<IsoSkeleton> forcedPart(const Cospan& c1, const Cospan& c2) {
  if (c1.footLeft != c2.footLeft || c1.footRight != c2.footRight ||
      c1.apex != c2.apex)
    return std::nullopt;
  const std::vector<Signature> s1 = signaturesOf(c1);
  const std::vector<Signature> s2 = signaturesOf(c2);

  std::map<Signature, std::uint32_t> bySig;
  for (std::uint32_t e = 0; e < c2.apex.size(); ++e)
    if (!s2[e].empty()) bySig.emplace(s2[e], e);

  IsoSkeleton sk;
  sk.forced.assign(c1.apex.size(), IsoSkeleton::kFree);
  std::size_t matched = 0;
  for (std::uint32_t e = 0; e < c1.apex.size(); ++e) {
    if (s1[e].empty()) {
      sk.freeSrc.push_back(e);
      continue;
    }
    auto it = bySig.find(s1[e]);
    if (it == bySig.end()) return std::nullopt;
    sk.forced[e] = it->second;
    ++matched;
  }
  if (matched != bySig.size()) return std::nullopt;
  for (std::uint32_t e = 0; e < c2.apex.size(); ++e)
    if (s2[e].empty()) sk.freeDst.push_back(e);
  // Apex sizes agree, so the free blocks automatically do as well.
  return sk;
}

}  // namespace

std::optional<CospanIso> forEachCospanIso(
    const Cospan& c1, const Cospan& c2,
    const std::function<bool(const CospanIso&)>& accept,
    std::uint64_t budget) {
  std::optional<IsoSkeleton> sk = forcedPart(c1, c2);
  if (!sk) return std::nullopt;

  std::vector<std::uint32_t> perm = sk->freeDst;  // already sorted ascending
  std::uint64_t visited = 0;
  do {
    if (++visited > budget)
      throw BudgetExceeded("isomorphism search budget exhausted");
    std::vector<std::uint32_t> table = sk->forced;
    for (std::size_t k = 0; k < perm.size(); ++k)
      table[sk->freeSrc[k]] = perm[k];
    CospanIso iso{FinFunction(c1.apex, c2.apex, std::move(table))};
    if (accept(iso)) return iso;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<CospanIso> isoSearch(const Cospan& c1, const Cospan& c2,
                                   std::uint64_t budget) {
  return forEachCospanIso(
      c1, c2, [](const CospanIso&) { return true; }, budget);
}

}  // namespace dcospan
