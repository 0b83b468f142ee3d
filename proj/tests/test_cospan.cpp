#include <cstdint>
#include <optional>

#include "dcospan/cospan.hpp"
#include "dcospan/gen.hpp"
#include "doctest.h"

using namespace dcospan;

namespace {

bool isCospanIso(const Cospan& a, const Cospan& b, const FinFunction& h) {
  return a.footLeft == b.footLeft && a.footRight == b.footRight &&
         h.dom() == a.apex && h.cod() == b.apex && h.isBijection() &&
         compose(h, a.legLeft) == b.legLeft &&
         compose(h, a.legRight) == b.legRight;
}

Cospan relabelApex(const Cospan& c, const FinFunction& p) {
  return makeCospan(c.footLeft, c.footRight, c.apex,
                    compose(p, c.legLeft), compose(p, c.legRight));
}

}  // namespace

TEST_SUITE("cospan") {

TEST_CASE("construction validates the legs") {
  CHECK_THROWS_AS(makeCospan(FinSet(1), FinSet(1), FinSet(1),
                             FinFunction(FinSet(1), FinSet(2), {0}),
                             FinFunction(FinSet(1), FinSet(1), {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(composeCospan(identityCospan(FinSet(2)),
                                identityCospan(FinSet(3))),
                  std::invalid_argument);
}

TEST_CASE("composeWithGlue returns a genuine pushout square") {
  Rng rng(401);
  for (int i = 0; i < 200; ++i) {
    const FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3);
    const FinSet z = randomFinSet(rng, 3);
    const Cospan c1 = randomCospan(rng, x, y, 5);
    const Cospan c2 = randomCospan(rng, y, z, 5);
    const GluedCospan g = composeWithGlue(c1, c2);
    CHECK(compose(g.intoLeft, c1.legRight) == compose(g.intoRight, c2.legLeft));
    CHECK(g.cospan.legLeft == compose(g.intoLeft, c1.legLeft));
    CHECK(g.cospan.legRight == compose(g.intoRight, c2.legRight));
    std::vector<bool> hit(g.cospan.apex.size(), false);
    for (std::uint32_t v : g.intoLeft.table()) hit[v] = true;
    for (std::uint32_t v : g.intoRight.table()) hit[v] = true;
    for (bool h : hit) CHECK(h);
  }
}

TEST_CASE("tensor adds feet, apexes, and legs blockwise") {
  Rng rng(402);
  for (int i = 0; i < 100; ++i) {
    const Cospan c1 = randomCospan(rng, randomFinSet(rng, 3),
                                   randomFinSet(rng, 3), 4);
    const Cospan c2 = randomCospan(rng, randomFinSet(rng, 3),
                                   randomFinSet(rng, 3), 4);
    const Cospan t = tensorCospan(c1, c2);
    CHECK(t.apex.size() == c1.apex.size() + c2.apex.size());
    CHECK(t.legLeft == sumMap(c1.legLeft, c2.legLeft));
    CHECK(t.legRight == sumMap(c1.legRight, c2.legRight));
  }
}

TEST_CASE("fromFunction is functorial up to isomorphism") {
  Rng rng(403);
  for (int i = 0; i < 100; ++i) {
    const FinSet x = randomFinSet(rng, 4), y = randomFinSet(rng, 4);
    const FinSet z = randomFinSet(rng, 4);
    if ((y.empty() && !x.empty()) || (z.empty() && !y.empty())) continue;
    const FinFunction f = randomFinFunction(rng, x, y);
    const FinFunction g = randomFinFunction(rng, y, z);
    const Cospan composite = composeCospan(fromFunction(f), fromFunction(g));
    const std::optional<CospanIso> w =
        isoSearch(composite, fromFunction(compose(g, f)));
    REQUIRE(w.has_value());
    CHECK(isCospanIso(composite, fromFunction(compose(g, f)), w->bijection));
  }
}

TEST_CASE("isoSearch finds relabelings and rejects impostors") {
  Rng rng(404);
  for (int i = 0; i < 200; ++i) {
    const FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3);
    const Cospan c = randomCospan(rng, x, y, 5);
    const FinFunction p = randomPermutation(rng, c.apex);
    const Cospan relabeled = relabelApex(c, p);
    const std::optional<CospanIso> w = isoSearch(c, relabeled);
    REQUIRE(w.has_value());
    CHECK(isCospanIso(c, relabeled, w->bijection));
    // A spare isolated point on one side only kills the isomorphism.
    const Cospan padded =
        makeCospan(c.footLeft, c.footRight, FinSet(c.apex.size() + 1),
                   FinFunction(x, FinSet(c.apex.size() + 1),
                               c.legLeft.table()),
                   FinFunction(y, FinSet(c.apex.size() + 1),
                               c.legRight.table()));
    CHECK(!isoSearch(c, padded).has_value());
  }
  // Same sizes, incompatible fibers: 2 points merged vs. kept apart.
  const Cospan merged = makeCospan(FinSet(2), FinSet(0), FinSet(2),
                                   FinFunction(FinSet(2), FinSet(2), {0, 0}),
                                   FinFunction(FinSet(0), FinSet(2), {}));
  const Cospan apart = makeCospan(FinSet(2), FinSet(0), FinSet(2),
                                  FinFunction(FinSet(2), FinSet(2), {0, 1}),
                                  FinFunction(FinSet(0), FinSet(2), {}));
  CHECK(!isoSearch(merged, apart).has_value());
}

TEST_CASE("forEachCospanIso enumerates the free block") {
  // No legs at all: every apex bijection qualifies, 3! candidates.
  const Cospan c = makeCospan(FinSet(0), FinSet(0), FinSet(3),
                              FinFunction(FinSet(0), FinSet(3), {}),
                              FinFunction(FinSet(0), FinSet(3), {}));
  int seen = 0;
  const std::optional<CospanIso> none = forEachCospanIso(
      c, c, [&](const CospanIso&) { ++seen; return false; });
  CHECK(!none.has_value());
  CHECK(seen == 6);
  CHECK_THROWS_AS(
      forEachCospanIso(c, c, [](const CospanIso&) { return false; }, 4),
      BudgetExceeded);
}

TEST_CASE("frobenius structure is special on the nose") {
  for (std::uint32_t n = 0; n <= 5; ++n) {
    const FrobeniusGenerators g = frobeniusGenerators(FinSet(n));
    CHECK(composeCospan(g.split, g.merge) == identityCospan(FinSet(n)));
    CHECK(opposite(g.merge) == g.split);
    CHECK(opposite(g.create) == g.discard);
  }
}

TEST_CASE("structure cospans: skeletal associator and unitors are identities") {
  const FinSet a(2), b(3), c(1);
  CHECK(structureCospan(StructureKind::Associator, a, b, c) ==
        identityCospan(FinSet(6)));
  CHECK(structureCospan(StructureKind::LeftUnitor, a) == identityCospan(a));
  CHECK(structureCospan(StructureKind::RightUnitor, a) == identityCospan(a));
  CHECK(structureCospan(StructureKind::Braiding, a, b) ==
        fromFunction(braidingMap(a, b)));
}

TEST_CASE("dual agrees with the opposite cospan up to isomorphism") {
  Rng rng(405);
  for (int i = 0; i < 100; ++i) {
    const Cospan c = randomCospan(rng, randomFinSet(rng, 3),
                                  randomFinSet(rng, 3), 4);
    const Cospan d = dual(c);
    const Cospan o = opposite(c);
    const std::optional<CospanIso> w = isoSearch(d, o);
    REQUIRE(w.has_value());
    CHECK(isCospanIso(d, o, w->bijection));
  }
}

TEST_CASE("dagger is involutive exactly") {
  Rng rng(406);
  for (int i = 0; i < 100; ++i) {
    const Cospan c = randomCospan(rng, randomFinSet(rng, 4),
                                  randomFinSet(rng, 4), 5);
    CHECK(opposite(opposite(c)) == c);
  }
}

}  // TEST_SUITE("cospan")
