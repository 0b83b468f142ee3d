#include "dcospan/suites.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dcospan/circuits.hpp"
#include "dcospan/decorated.hpp"
#include "dcospan/gen.hpp"

namespace dcospan {
namespace {

struct Failure {
  std::string what;
  std::size_t size = 0;
};

// Runs each law over its own deterministic case stream and keeps the first
// failing case. Unlike the generic harness in decoration.hpp these laws are
// expected to hold, so no shrinking: a failure here is a defect, and the
// original case is evidence enough.
class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, const SuiteOptions& opts) : opts_(opts) {
    report_.suite = std::move(suite);
    report_.seed = opts.seed;
    report_.cases = opts.cases;
  }

  using Body = std::function<std::optional<Failure>(Rng&, int)>;

  void law(const std::string& name, const Body& body) {
    law(name, opts_.cases, body);
  }

  void law(const std::string& name, int cases, const Body& body) {
    LawOutcome outcome;
    outcome.law = name;
    for (int i = 0; i < cases; ++i) {
      Rng rng(mixSeed(opts_.seed,
                      (std::uint64_t(lawIndex_) << 32) | std::uint64_t(i)));
      std::optional<Failure> failure = body(rng, i);
      if (failure) {
        std::ostringstream os;
        os << "case " << i << ": " << failure->what;
        outcome.passed = false;
        outcome.counterexample = os.str();
        outcome.counterexampleSize = failure->size;
        break;
      }
    }
    ++lawIndex_;
    report_.laws.push_back(std::move(outcome));
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  const SuiteOptions& opts_;
  SuiteReport report_;
  std::uint32_t lawIndex_ = 0;
};

std::string showCospan(const Cospan& c) {
  std::ostringstream os;
  os << c.footLeft.size() << "-[" << showFunction(c.legLeft) << "]->"
     << c.apex.size() << "<-[" << showFunction(c.legRight) << "]-"
     << c.footRight.size();
  return os.str();
}

std::size_t cospanSize(const Cospan& c) {
  return std::size_t(c.footLeft.size()) + c.footRight.size() + c.apex.size();
}

template <DecorationFunctor F, typename Gen>
std::string showDecorated(const Gen& gen, const DecoratedCospan<F>& d) {
  return showCospan(d.shape) + " / " + gen.show(d.decoration);
}

template <DecorationFunctor F, typename Gen>
std::size_t decoratedSize(const Gen& gen, const DecoratedCospan<F>& d) {
  return cospanSize(d.shape) + gen.size(d.decoration);
}

// Assemble the mediating apex map forced by pairs of "these two functions
// must agree through it" squares; nullopt if the assignments conflict or
// leave part of the apex unconstrained.
std::optional<FinFunction> mediate(
    FinSet domApex, FinSet codApex,
    const std::vector<std::pair<FinFunction, FinFunction>>& along) {
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> table(domApex.size(), kUnset);
  for (const auto& [via, to] : along) {
    for (std::uint32_t s = 0; s < via.dom().size(); ++s) {
      const std::uint32_t src = via(s);
      const std::uint32_t dst = to(s);
      if (table[src] != kUnset && table[src] != dst) return std::nullopt;
      table[src] = dst;
    }
  }
  for (std::uint32_t v : table)
    if (v == kUnset) return std::nullopt;
  return FinFunction(domApex, codApex, std::move(table));
}

// Checks that h is an isomorphism of decorated cospans a -> b.
template <DecorationFunctor F>
bool mediates(const F& f, const std::optional<FinFunction>& h,
              const DecoratedCospan<F>& a, const DecoratedCospan<F>& b) {
  if (!h || !h->isBijection()) return false;
  return a.shape.footLeft == b.shape.footLeft &&
         a.shape.footRight == b.shape.footRight &&
         compose(*h, a.shape.legLeft) == b.shape.legLeft &&
         compose(*h, a.shape.legRight) == b.shape.legRight &&
         f.equal(f.mapAlong(*h, a.decoration), b.decoration);
}

// ---------------------------------------------------------------------------
// Gluing: the composition/tensor layer over a decoration functor.

template <DecorationFunctor F, typename Gen>
SuiteReport gluingSuite(const std::string& name, const F& f, const Gen& gen,
                        const SuiteOptions& opts) {
  SuiteBuilder b(name, opts);
  constexpr std::uint32_t kFoot = 3;
  constexpr std::uint32_t kApex = 4;

  auto decorated = [&](Rng& rng, FinSet left, FinSet right) {
    Cospan shape = randomCospan(rng, left, right, kApex);
    typename F::Decoration d = gen.decoration(rng, shape.apex);
    return makeDecorated(f, shape, std::move(d));
  };
  auto equalDecorated = [&](const DecoratedCospan<F>& a,
                            const DecoratedCospan<F>& c) {
    return a.shape == c.shape && f.equal(a.decoration, c.decoration);
  };
  auto pairFailure = [&](const char* what, const DecoratedCospan<F>& a,
                         const DecoratedCospan<F>& c) {
    return Failure{std::string(what) + ": " + showDecorated(gen, a) + "  vs  " +
                       showDecorated(gen, c),
                   decoratedSize(gen, a) + decoratedSize(gen, c)};
  };

  b.law("representation-independence",
        [&](Rng& rng, int) -> std::optional<Failure> {
          FinSet x = randomFinSet(rng, kFoot);
          FinSet y = randomFinSet(rng, kFoot);
          FinSet z = randomFinSet(rng, kFoot);
          DecoratedCospan<F> d1 = decorated(rng, x, y);
          DecoratedCospan<F> d2 = decorated(rng, y, z);
          FinFunction p1 = randomPermutation(rng, d1.shape.apex);
          FinFunction p2 = randomPermutation(rng, d2.shape.apex);
          auto relabel = [&](const DecoratedCospan<F>& d, const FinFunction& p) {
            Cospan shape = makeCospan(d.shape.footLeft, d.shape.footRight,
                                      d.shape.apex, compose(p, d.shape.legLeft),
                                      compose(p, d.shape.legRight));
            return makeDecorated(f, std::move(shape),
                                 f.mapAlong(p, d.decoration));
          };
          DecoratedCospan<F> e1 = relabel(d1, p1);
          DecoratedCospan<F> e2 = relabel(d2, p2);
          GluedCospan glue = composeWithGlue(d1.shape, d2.shape);
          GluedCospan glueP = composeWithGlue(e1.shape, e2.shape);
          DecoratedCospan<F> c = composeDecorated(f, d1, d2);
          DecoratedCospan<F> cP = composeDecorated(f, e1, e2);
          std::optional<FinFunction> h =
              mediate(c.shape.apex, cP.shape.apex,
                      {{glue.intoLeft, compose(glueP.intoLeft, p1)},
                       {glue.intoRight, compose(glueP.intoRight, p2)}});
          if (!mediates(f, h, c, cP))
            return pairFailure("relabeled composite is not isomorphic", c, cP);
          return std::nullopt;
        });

  b.law("associativity", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet w = randomFinSet(rng, kFoot);
    FinSet x = randomFinSet(rng, kFoot);
    FinSet y = randomFinSet(rng, kFoot);
    FinSet z = randomFinSet(rng, kFoot);
    DecoratedCospan<F> d1 = decorated(rng, w, x);
    DecoratedCospan<F> d2 = decorated(rng, x, y);
    DecoratedCospan<F> d3 = decorated(rng, y, z);
    DecoratedCospan<F> lhs =
        composeDecorated(f, composeDecorated(f, d1, d2), d3);
    DecoratedCospan<F> rhs =
        composeDecorated(f, d1, composeDecorated(f, d2, d3));
    if (!equalDecorated(lhs, rhs))
      return pairFailure("bracketing changed the composite", lhs, rhs);
    return std::nullopt;
  });

  b.law("identity-left", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, kFoot);
    FinSet y = randomFinSet(rng, kFoot);
    DecoratedCospan<F> d = decorated(rng, x, y);
    DecoratedCospan<F> lhs =
        composeDecorated(f, identityDecorated(f, x), d);
    GluedCospan glue = composeWithGlue(identityCospan(x), d.shape);
    std::optional<FinFunction> h = mediate(
        lhs.shape.apex, d.shape.apex, {{glue.intoRight, identity(d.shape.apex)}});
    if (!mediates(f, h, lhs, d))
      return pairFailure("left identity law broke", lhs, d);
    return std::nullopt;
  });

  b.law("identity-right", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, kFoot);
    FinSet y = randomFinSet(rng, kFoot);
    DecoratedCospan<F> d = decorated(rng, x, y);
    DecoratedCospan<F> lhs =
        composeDecorated(f, d, identityDecorated(f, y));
    GluedCospan glue = composeWithGlue(d.shape, identityCospan(y));
    std::optional<FinFunction> h = mediate(
        lhs.shape.apex, d.shape.apex, {{glue.intoLeft, identity(d.shape.apex)}});
    if (!mediates(f, h, lhs, d))
      return pairFailure("right identity law broke", lhs, d);
    return std::nullopt;
  });

  b.law("empty-decoration-collapse",
        [&](Rng& rng, int) -> std::optional<Failure> {
          FinSet x = randomFinSet(rng, kFoot);
          FinSet y = randomFinSet(rng, kFoot);
          FinSet z = randomFinSet(rng, kFoot);
          DecoratedCospan<F> d = decorated(rng, x, y);
          Cospan shapeE = randomCospan(rng, y, z, kApex);
          DecoratedCospan<F> composite =
              composeDecorated(f, d, embedCospan(f, shapeE));
          GluedCospan glue = composeWithGlue(d.shape, shapeE);
          typename F::Decoration expected =
              f.mapAlong(glue.intoLeft, d.decoration);
          if (!f.equal(composite.decoration, expected))
            return Failure{"composing with an undecorated cospan changed the "
                           "decoration beyond reindexing: " +
                               showDecorated(gen, d) + " then " +
                               showCospan(shapeE),
                           decoratedSize(gen, d) + cospanSize(shapeE)};
          return std::nullopt;
        });

  b.law("embedding-functoriality", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, kFoot);
    FinSet y = randomFinSet(rng, kFoot);
    FinSet z = randomFinSet(rng, kFoot);
    Cospan c1 = randomCospan(rng, x, y, kApex);
    Cospan c2 = randomCospan(rng, y, z, kApex);
    DecoratedCospan<F> lhs =
        composeDecorated(f, embedCospan(f, c1), embedCospan(f, c2));
    DecoratedCospan<F> rhs = embedCospan(f, composeCospan(c1, c2));
    if (!equalDecorated(lhs, rhs))
      return pairFailure("embedding does not commute with composition", lhs,
                         rhs);
    return std::nullopt;
  });

  b.law("interchange", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x1 = randomFinSet(rng, kFoot), y1 = randomFinSet(rng, kFoot),
           z1 = randomFinSet(rng, kFoot);
    FinSet x2 = randomFinSet(rng, kFoot), y2 = randomFinSet(rng, kFoot),
           z2 = randomFinSet(rng, kFoot);
    DecoratedCospan<F> d1 = decorated(rng, x1, y1);
    DecoratedCospan<F> e1 = decorated(rng, y1, z1);
    DecoratedCospan<F> d2 = decorated(rng, x2, y2);
    DecoratedCospan<F> e2 = decorated(rng, y2, z2);
    DecoratedCospan<F> lhs = composeDecorated(
        f, tensorDecorated(f, d1, d2), tensorDecorated(f, e1, e2));
    DecoratedCospan<F> rhs =
        tensorDecorated(f, composeDecorated(f, d1, e1),
                        composeDecorated(f, d2, e2));
    GluedCospan glueL = composeWithGlue(tensorCospan(d1.shape, d2.shape),
                                        tensorCospan(e1.shape, e2.shape));
    GluedCospan glue1 = composeWithGlue(d1.shape, e1.shape);
    GluedCospan glue2 = composeWithGlue(d2.shape, e2.shape);
    const FinSet n1 = d1.shape.apex, n2 = d2.shape.apex;
    const FinSet m1 = e1.shape.apex, m2 = e2.shape.apex;
    const FinSet p1 = glue1.cospan.apex, p2 = glue2.cospan.apex;
    std::optional<FinFunction> h = mediate(
        lhs.shape.apex, rhs.shape.apex,
        {{compose(glueL.intoLeft, inl(n1, n2)),
          compose(inl(p1, p2), glue1.intoLeft)},
         {compose(glueL.intoLeft, inr(n1, n2)),
          compose(inr(p1, p2), glue2.intoLeft)},
         {compose(glueL.intoRight, inl(m1, m2)),
          compose(inl(p1, p2), glue1.intoRight)},
         {compose(glueL.intoRight, inr(m1, m2)),
          compose(inr(p1, p2), glue2.intoRight)}});
    if (!mediates(f, h, lhs, rhs))
      return pairFailure("tensor does not interchange with composition", lhs,
                         rhs);
    return std::nullopt;
  });

  b.law("braiding-naturality", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x1 = randomFinSet(rng, 2), y1 = randomFinSet(rng, 2);
    FinSet x2 = randomFinSet(rng, 2), y2 = randomFinSet(rng, 2);
    Cospan s1 = randomCospan(rng, x1, y1, 3);
    Cospan s2 = randomCospan(rng, x2, y2, 3);
    DecoratedCospan<F> d1 = makeDecorated(f, s1, gen.decoration(rng, s1.apex));
    DecoratedCospan<F> d2 = makeDecorated(f, s2, gen.decoration(rng, s2.apex));
    DecoratedCospan<F> braidY = embedCospan(
        f, structureCospan(StructureKind::Braiding, y1, y2));
    DecoratedCospan<F> braidX = embedCospan(
        f, structureCospan(StructureKind::Braiding, x1, x2));
    DecoratedCospan<F> lhs =
        composeDecorated(f, tensorDecorated(f, d1, d2), braidY);
    DecoratedCospan<F> rhs =
        composeDecorated(f, braidX, tensorDecorated(f, d2, d1));
    if (!isoDecorated(f, lhs, rhs, opts.isoBudget))
      return pairFailure("braiding is not natural", lhs, rhs);
    return std::nullopt;
  });

  b.law("unit-collapse", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, kFoot);
    FinSet y = randomFinSet(rng, kFoot);
    DecoratedCospan<F> d = decorated(rng, x, y);
    DecoratedCospan<F> unit = identityDecorated(f, FinSet(0));
    if (!equalDecorated(tensorDecorated(f, d, unit), d) ||
        !equalDecorated(tensorDecorated(f, unit, d), d))
      return Failure{"tensoring with the empty identity changed " +
                         showDecorated(gen, d),
                     decoratedSize(gen, d)};
    return std::nullopt;
  });

  return b.finish();
}

// ---------------------------------------------------------------------------
// Hypergraph axioms, shared between the plain category and the decorated
// instances.

template <typename Obj>
struct HypergraphOps {
  std::function<Obj(FinSet)> ident, merge, create, split, discard;
  std::function<Obj(FinSet, FinSet)> braid;
  std::function<Obj(const Obj&, const Obj&)> comp, tens;
  std::function<bool(const Obj&, const Obj&)> iso, exact;
};

HypergraphOps<Cospan> plainOps(std::uint64_t budget) {
  HypergraphOps<Cospan> o;
  o.ident = [](FinSet x) { return identityCospan(x); };
  o.merge = [](FinSet x) { return frobeniusGenerators(x).merge; };
  o.create = [](FinSet x) { return frobeniusGenerators(x).create; };
  o.split = [](FinSet x) { return frobeniusGenerators(x).split; };
  o.discard = [](FinSet x) { return frobeniusGenerators(x).discard; };
  o.braid = [](FinSet a, FinSet c) {
    return structureCospan(StructureKind::Braiding, a, c);
  };
  o.comp = [](const Cospan& a, const Cospan& c) { return composeCospan(a, c); };
  o.tens = [](const Cospan& a, const Cospan& c) { return tensorCospan(a, c); };
  o.iso = [budget](const Cospan& a, const Cospan& c) {
    return isoSearch(a, c, budget).has_value();
  };
  o.exact = [](const Cospan& a, const Cospan& c) { return a == c; };
  return o;
}

template <DecorationFunctor F>
HypergraphOps<DecoratedCospan<F>> decoratedOps(const F& f,
                                               std::uint64_t budget) {
  HypergraphOps<DecoratedCospan<F>> o;
  o.ident = [f](FinSet x) { return identityDecorated(f, x); };
  o.merge = [f](FinSet x) { return frobeniusDecorated(f, x).merge; };
  o.create = [f](FinSet x) { return frobeniusDecorated(f, x).create; };
  o.split = [f](FinSet x) { return frobeniusDecorated(f, x).split; };
  o.discard = [f](FinSet x) { return frobeniusDecorated(f, x).discard; };
  o.braid = [f](FinSet a, FinSet c) {
    return embedCospan(f, structureCospan(StructureKind::Braiding, a, c));
  };
  o.comp = [f](const DecoratedCospan<F>& a, const DecoratedCospan<F>& c) {
    return composeDecorated(f, a, c);
  };
  o.tens = [f](const DecoratedCospan<F>& a, const DecoratedCospan<F>& c) {
    return tensorDecorated(f, a, c);
  };
  o.iso = [f, budget](const DecoratedCospan<F>& a,
                      const DecoratedCospan<F>& c) {
    return isoDecorated(f, a, c, budget).has_value();
  };
  o.exact = [f](const DecoratedCospan<F>& a, const DecoratedCospan<F>& c) {
    return a.shape == c.shape && f.equal(a.decoration, c.decoration);
  };
  return o;
}

template <typename Obj>
void addHypergraphAxioms(SuiteBuilder& b, const HypergraphOps<Obj>& o) {
  auto sizeLaw = [&b, &o](const std::string& name,
                          const std::function<bool(FinSet)>& body) {
    b.law(name, 5, [&o, body](Rng&, int i) -> std::optional<Failure> {
      FinSet x(static_cast<std::uint32_t>(i));
      if (!body(x))
        return Failure{"fails on the " + std::to_string(i) +
                           "-element carrier",
                       std::size_t(i)};
      return std::nullopt;
    });
  };

  sizeLaw("merge-associative", [&o](FinSet x) {
    Obj m = o.merge(x), i = o.ident(x);
    return o.iso(o.comp(o.tens(m, i), m), o.comp(o.tens(i, m), m));
  });
  sizeLaw("merge-unital", [&o](FinSet x) {
    Obj m = o.merge(x), i = o.ident(x), e = o.create(x);
    return o.iso(o.comp(o.tens(e, i), m), i) &&
           o.iso(o.comp(o.tens(i, e), m), i);
  });
  sizeLaw("merge-commutative", [&o](FinSet x) {
    Obj m = o.merge(x);
    return o.iso(o.comp(o.braid(x, x), m), m);
  });
  sizeLaw("split-coassociative", [&o](FinSet x) {
    Obj s = o.split(x), i = o.ident(x);
    return o.iso(o.comp(s, o.tens(s, i)), o.comp(s, o.tens(i, s)));
  });
  sizeLaw("split-counital", [&o](FinSet x) {
    Obj s = o.split(x), i = o.ident(x), d = o.discard(x);
    return o.iso(o.comp(s, o.tens(d, i)), i) &&
           o.iso(o.comp(s, o.tens(i, d)), i);
  });
  sizeLaw("split-cocommutative", [&o](FinSet x) {
    Obj s = o.split(x);
    return o.iso(o.comp(s, o.braid(x, x)), s);
  });
  sizeLaw("frobenius", [&o](FinSet x) {
    Obj m = o.merge(x), s = o.split(x), i = o.ident(x);
    Obj mid = o.comp(m, s);
    return o.iso(o.comp(o.tens(s, i), o.tens(i, m)), mid) &&
           o.iso(o.comp(o.tens(i, s), o.tens(m, i)), mid);
  });
  sizeLaw("special", [&o](FinSet x) {
    return o.exact(o.comp(o.split(x), o.merge(x)), o.ident(x));
  });
  sizeLaw("snake", [&o](FinSet x) {
    Obj i = o.ident(x);
    Obj coev = o.comp(o.create(x), o.split(x));
    Obj ev = o.comp(o.merge(x), o.discard(x));
    return o.iso(o.comp(o.tens(coev, i), o.tens(i, ev)), i) &&
           o.iso(o.comp(o.tens(i, coev), o.tens(ev, i)), i);
  });
  b.law("merge-compatible-with-sum", 16,
        [&o](Rng&, int i) -> std::optional<Failure> {
          FinSet x(std::uint32_t(i % 4)), y(std::uint32_t(i / 4));
          FinSet xy(x.size() + y.size());
          Obj middle =
              o.tens(o.tens(o.ident(x), o.braid(y, x)), o.ident(y));
          Obj rhs = o.comp(middle, o.tens(o.merge(x), o.merge(y)));
          if (!o.iso(o.merge(xy), rhs))
            return Failure{"fails at carrier sizes " + std::to_string(x.size()) +
                               "+" + std::to_string(y.size()),
                           std::size_t(xy.size())};
          return std::nullopt;
        });
  b.law("create-compatible-with-sum", 16,
        [&o](Rng&, int i) -> std::optional<Failure> {
          FinSet x(std::uint32_t(i % 4)), y(std::uint32_t(i / 4));
          FinSet xy(x.size() + y.size());
          if (!o.iso(o.create(xy), o.tens(o.create(x), o.create(y))))
            return Failure{"fails at carrier sizes " + std::to_string(x.size()) +
                               "+" + std::to_string(y.size()),
                           std::size_t(xy.size())};
          return std::nullopt;
        });
}

SuiteReport axiomsCospanSuite(const SuiteOptions& opts) {
  SuiteBuilder b("axioms-cospan", opts);
  HypergraphOps<Cospan> o = plainOps(opts.isoBudget);
  addHypergraphAxioms(b, o);
  b.law("dagger-involutive", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan c = randomCospan(rng, randomFinSet(rng, 3), randomFinSet(rng, 3), 4);
    if (!(opposite(opposite(c)) == c))
      return Failure{showCospan(c), cospanSize(c)};
    return std::nullopt;
  });
  b.law("dual-agrees-with-dagger", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan c = randomCospan(rng, randomFinSet(rng, 2), randomFinSet(rng, 2), 3);
    if (!isoSearch(dual(c), opposite(c), opts.isoBudget))
      return Failure{showCospan(c), cospanSize(c)};
    return std::nullopt;
  });
  return b.finish();
}

template <DecorationFunctor F, typename Gen>
SuiteReport axiomsDecoratedSuite(const std::string& name, const F& f,
                                 const Gen& gen, const SuiteOptions& opts) {
  SuiteBuilder b(name, opts);
  HypergraphOps<DecoratedCospan<F>> o = decoratedOps(f, opts.isoBudget);
  addHypergraphAxioms(b, o);
  b.law("dagger-involutive", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan shape =
        randomCospan(rng, randomFinSet(rng, 3), randomFinSet(rng, 3), 4);
    DecoratedCospan<F> d =
        makeDecorated(f, shape, gen.decoration(rng, shape.apex));
    DecoratedCospan<F> back = daggerDecorated(f, daggerDecorated(f, d));
    if (!(back.shape == d.shape && f.equal(back.decoration, d.decoration)))
      return Failure{showDecorated(gen, d), decoratedSize(gen, d)};
    return std::nullopt;
  });
  b.law("dual-agrees-with-dagger", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan shape =
        randomCospan(rng, randomFinSet(rng, 2), randomFinSet(rng, 2), 3);
    DecoratedCospan<F> d =
        makeDecorated(f, shape, gen.decoration(rng, shape.apex));
    if (!isoDecorated(f, dualDecorated(f, d), daggerDecorated(f, d),
                      opts.isoBudget))
      return Failure{showDecorated(gen, d), decoratedSize(gen, d)};
    return std::nullopt;
  });
  return b.finish();
}

// ---------------------------------------------------------------------------
// Plain agreement: over the trivial decoration functor, every decorated
// operation must agree with the corresponding plain cospan operation on the
// nose.

SuiteReport plainAgreementSuite(const SuiteOptions& opts) {
  SuiteBuilder b("plain-agreement", opts);
  const UnitFunctor u{};
  auto same = [&](const DecoratedCospan<UnitFunctor>& d, const Cospan& c) {
    return d.shape == c && u.valid(c.apex, d.decoration);
  };
  b.law("compose-agrees", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3),
           z = randomFinSet(rng, 3);
    Cospan c1 = randomCospan(rng, x, y, 4);
    Cospan c2 = randomCospan(rng, y, z, 4);
    if (!same(composeDecorated(u, embedCospan(u, c1), embedCospan(u, c2)),
              composeCospan(c1, c2)))
      return Failure{showCospan(c1) + " ; " + showCospan(c2),
                     cospanSize(c1) + cospanSize(c2)};
    return std::nullopt;
  });
  b.law("tensor-agrees", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan c1 = randomCospan(rng, randomFinSet(rng, 3), randomFinSet(rng, 3), 4);
    Cospan c2 = randomCospan(rng, randomFinSet(rng, 3), randomFinSet(rng, 3), 4);
    if (!same(tensorDecorated(u, embedCospan(u, c1), embedCospan(u, c2)),
              tensorCospan(c1, c2)))
      return Failure{showCospan(c1) + " (x) " + showCospan(c2),
                     cospanSize(c1) + cospanSize(c2)};
    return std::nullopt;
  });
  b.law("dagger-agrees", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan c = randomCospan(rng, randomFinSet(rng, 3), randomFinSet(rng, 3), 4);
    if (!same(daggerDecorated(u, embedCospan(u, c)), opposite(c)))
      return Failure{showCospan(c), cospanSize(c)};
    return std::nullopt;
  });
  b.law("dual-agrees", [&](Rng& rng, int) -> std::optional<Failure> {
    Cospan c = randomCospan(rng, randomFinSet(rng, 2), randomFinSet(rng, 2), 3);
    if (!same(dualDecorated(u, embedCospan(u, c)), dual(c)))
      return Failure{showCospan(c), cospanSize(c)};
    return std::nullopt;
  });
  b.law("identity-agrees", 5, [&](Rng&, int i) -> std::optional<Failure> {
    FinSet x(static_cast<std::uint32_t>(i));
    if (!same(identityDecorated(u, x), identityCospan(x)))
      return Failure{"identity on " + std::to_string(i) + " elements",
                     std::size_t(i)};
    return std::nullopt;
  });
  b.law("frobenius-agrees", 5, [&](Rng&, int i) -> std::optional<Failure> {
    FinSet x(static_cast<std::uint32_t>(i));
    FrobeniusGenerators plain = frobeniusGenerators(x);
    FrobeniusDecorated<UnitFunctor> dec = frobeniusDecorated(u, x);
    if (!same(dec.merge, plain.merge) || !same(dec.create, plain.create) ||
        !same(dec.split, plain.split) || !same(dec.discard, plain.discard))
      return Failure{"generators on " + std::to_string(i) + " elements",
                     std::size_t(i)};
    return std::nullopt;
  });
  return b.finish();
}

// ---------------------------------------------------------------------------
// Functor image: black-boxing as a functor between the two decorated-cospan
// categories, identity on the underlying sets.

SuiteReport functorImageSuite(const SuiteOptions& opts) {
  SuiteBuilder b("functor-image", opts);
  const GraphFunctor gf{};
  const LinSubFunctor lf{};
  const ResTransformation res{};
  const IdentityEndofunctor ide{};
  const GraphGen gen{};
  auto apply = [&](const CircuitCospan& d) { return applyFunctor(res, ide, d); };
  auto exact = [&](const DecoratedCospan<LinSubFunctor>& a,
                   const DecoratedCospan<LinSubFunctor>& c) {
    return a.shape == c.shape && lf.equal(a.decoration, c.decoration);
  };
  auto circuit = [&](Rng& rng, FinSet left, FinSet right) {
    Cospan shape = randomCospan(rng, left, right, 4);
    return makeDecorated(gf, shape, gen.decoration(rng, shape.apex));
  };

  b.law("preserves-identities", 5, [&](Rng&, int i) -> std::optional<Failure> {
    FinSet x(static_cast<std::uint32_t>(i));
    if (!exact(apply(identityDecorated(gf, x)), identityDecorated(lf, x)))
      return Failure{"identity on " + std::to_string(i) + " elements",
                     std::size_t(i)};
    return std::nullopt;
  });
  b.law("preserves-composition", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3),
           z = randomFinSet(rng, 3);
    CircuitCospan d1 = circuit(rng, x, y);
    CircuitCospan d2 = circuit(rng, y, z);
    if (!exact(apply(composeDecorated(gf, d1, d2)),
               composeDecorated(lf, apply(d1), apply(d2))))
      return Failure{showDecorated(gen, d1) + " ; " + showDecorated(gen, d2),
                     decoratedSize(gen, d1) + decoratedSize(gen, d2)};
    return std::nullopt;
  });
  b.law("preserves-tensor", [&](Rng& rng, int) -> std::optional<Failure> {
    CircuitCospan d1 = circuit(rng, randomFinSet(rng, 3), randomFinSet(rng, 3));
    CircuitCospan d2 = circuit(rng, randomFinSet(rng, 3), randomFinSet(rng, 3));
    if (!exact(apply(tensorDecorated(gf, d1, d2)),
               tensorDecorated(lf, apply(d1), apply(d2))))
      return Failure{showDecorated(gen, d1) + " (x) " + showDecorated(gen, d2),
                     decoratedSize(gen, d1) + decoratedSize(gen, d2)};
    return std::nullopt;
  });
  b.law("preserves-dagger", [&](Rng& rng, int) -> std::optional<Failure> {
    CircuitCospan d = circuit(rng, randomFinSet(rng, 3), randomFinSet(rng, 3));
    if (!exact(apply(daggerDecorated(gf, d)), daggerDecorated(lf, apply(d))))
      return Failure{showDecorated(gen, d), decoratedSize(gen, d)};
    return std::nullopt;
  });
  b.law("preserves-frobenius", 5, [&](Rng&, int i) -> std::optional<Failure> {
    FinSet x(static_cast<std::uint32_t>(i));
    FrobeniusDecorated<GraphFunctor> src = frobeniusDecorated(gf, x);
    FrobeniusDecorated<LinSubFunctor> dst = frobeniusDecorated(lf, x);
    if (!exact(apply(src.merge), dst.merge) ||
        !exact(apply(src.create), dst.create) ||
        !exact(apply(src.split), dst.split) ||
        !exact(apply(src.discard), dst.discard))
      return Failure{"generators on " + std::to_string(i) + " elements",
                     std::size_t(i)};
    return std::nullopt;
  });
  b.law("preserves-structure", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet a = randomFinSet(rng, 3), c = randomFinSet(rng, 3);
    for (StructureKind kind :
         {StructureKind::Braiding, StructureKind::LeftUnitor,
          StructureKind::RightUnitor, StructureKind::Associator}) {
      Cospan s = structureCospan(kind, a, c, randomFinSet(rng, 3));
      if (!exact(apply(embedCospan(gf, s)), embedCospan(lf, s)))
        return Failure{showCospan(s), cospanSize(s)};
    }
    return std::nullopt;
  });
  return b.finish();
}

// ---------------------------------------------------------------------------
// Semantics: black-boxed circuits against the nodal-analysis oracle and
// against textbook reductions.

CircuitCospan makeCircuit(FinSet feetLeft, FinSet feetRight,
                          std::uint32_t apex,
                          std::vector<std::uint32_t> legLeft,
                          std::vector<std::uint32_t> legRight,
                          std::vector<LabeledGraph::Edge> edges) {
  FinSet n(apex);
  Cospan shape = makeCospan(
      feetLeft, feetRight, n,
      FinFunction(feetLeft, n, std::move(legLeft)),
      FinFunction(feetRight, n, std::move(legRight)));
  return makeDecorated(GraphFunctor{}, std::move(shape),
                       LabeledGraph(n, std::move(edges)));
}

SuiteReport semanticsSuite(const SuiteOptions& opts) {
  SuiteBuilder b("semantics", opts);
  const GraphFunctor gf{};
  auto randomCircuit = [&](Rng& rng) {
    FinSet x = randomFinSet(rng, 3), y = randomFinSet(rng, 3);
    Cospan shape = randomCospan(rng, x, y, 6);
    LabeledGraph g = randomGraph(rng, shape.apex, 8);
    return makeDecorated(gf, shape, std::move(g));
  };
  auto positiveRat = [](Rng& rng) {
    return Rat(1 + randBelow(rng, 6), 1 + randBelow(rng, 4));
  };

  b.law("matches-oracle", [&](Rng& rng, int) -> std::optional<Failure> {
    CircuitCospan d = randomCircuit(rng);
    Subspace got = behavior(d);
    Subspace want = oracleNodal(
        d.decoration, copair(d.shape.legLeft, d.shape.legRight));
    if (got != want)
      return Failure{showDecorated(GraphGen{}, d),
                     decoratedSize(GraphGen{}, d)};
    return std::nullopt;
  });
  b.law("identity-wire", 1, [&](Rng&, int) -> std::optional<Failure> {
    Subspace got = behavior(identityDecorated(gf, FinSet(1)));
    Matrix rows(2, 4);
    rows.at(0, 0) = Rat(1);
    rows.at(0, 1) = Rat(1);
    rows.at(1, 2) = Rat(1);
    rows.at(1, 3) = Rat(-1);
    if (got != Subspace::fromGenerators(rows, 4))
      return Failure{"plain wire has behavior " + showSubspace(got), 1};
    return std::nullopt;
  });
  b.law("single-edge", [&](Rng& rng, int) -> std::optional<Failure> {
    Rat r = positiveRat(rng);
    CircuitCospan d =
        makeCircuit(FinSet(1), FinSet(1), 2, {0}, {1}, {{0, 1, r}});
    Rat c = Rat(2) / r;
    Matrix rows(2, 4);
    rows.at(0, 0) = Rat(1);
    rows.at(0, 2) = c;
    rows.at(0, 3) = -c;
    rows.at(1, 1) = Rat(1);
    rows.at(1, 2) = -c;
    rows.at(1, 3) = c;
    if (behavior(d) != Subspace::fromGenerators(rows, 4))
      return Failure{"resistance " + r.str(), 2};
    return std::nullopt;
  });
  b.law("series-reduces", [&](Rng& rng, int) -> std::optional<Failure> {
    Rat r1 = positiveRat(rng), r2 = positiveRat(rng);
    CircuitCospan chain = makeCircuit(FinSet(1), FinSet(1), 3, {0}, {2},
                                      {{0, 1, r1}, {1, 2, r2}});
    CircuitCospan single =
        makeCircuit(FinSet(1), FinSet(1), 2, {0}, {1}, {{0, 1, r1 + r2}});
    if (!behaviorEquivalent(chain, single))
      return Failure{"series " + r1.str() + " + " + r2.str(), 3};
    return std::nullopt;
  });
  b.law("parallel-reduces", [&](Rng& rng, int) -> std::optional<Failure> {
    Rat r1 = positiveRat(rng), r2 = positiveRat(rng);
    CircuitCospan pair = makeCircuit(FinSet(1), FinSet(1), 2, {0}, {1},
                                     {{0, 1, r1}, {0, 1, r2}});
    Rat combined = (r1 * r2) / (r1 + r2);
    CircuitCospan single =
        makeCircuit(FinSet(1), FinSet(1), 2, {0}, {1}, {{0, 1, combined}});
    if (!behaviorEquivalent(pair, single))
      return Failure{"parallel " + r1.str() + " || " + r2.str(), 2};
    return std::nullopt;
  });
  b.law("triangle-reduces", 1, [&](Rng&, int) -> std::optional<Failure> {
    CircuitCospan triangle =
        makeCircuit(FinSet(1), FinSet(1), 3, {0}, {1},
                    {{0, 1, Rat(1)}, {0, 2, Rat(1)}, {1, 2, Rat(1)}});
    CircuitCospan single =
        makeCircuit(FinSet(1), FinSet(1), 2, {0}, {1}, {{0, 1, Rat(2, 3)}});
    if (!behaviorEquivalent(triangle, single))
      return Failure{"unit triangle across one side", 3};
    return std::nullopt;
  });
  b.law("label-scaling", [&](Rng& rng, int) -> std::optional<Failure> {
    CircuitCospan d = randomCircuit(rng);
    Rat lambda = positiveRat(rng);
    std::vector<LabeledGraph::Edge> scaled = d.decoration.edges();
    for (LabeledGraph::Edge& e : scaled) e.label = e.label * lambda;
    CircuitCospan ds = makeDecorated(
        gf, d.shape, LabeledGraph(d.shape.apex, std::move(scaled)));
    const std::size_t feet =
        d.shape.footLeft.size() + d.shape.footRight.size();
    Subspace base = behavior(d);
    Matrix rows = base.basis();
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = feet; j < 2 * feet; ++j)
        rows.at(i, j) = rows.at(i, j) / lambda;
    if (behavior(ds) != Subspace::fromGenerators(rows, 2 * feet))
      return Failure{"scale " + lambda.str() + " on " +
                         showDecorated(GraphGen{}, d),
                     decoratedSize(GraphGen{}, d)};
    return std::nullopt;
  });
  b.law("relabel-invariance", [&](Rng& rng, int) -> std::optional<Failure> {
    CircuitCospan d = randomCircuit(rng);
    FinFunction p = randomPermutation(rng, d.shape.apex);
    Cospan shape = makeCospan(d.shape.footLeft, d.shape.footRight,
                              d.shape.apex, compose(p, d.shape.legLeft),
                              compose(p, d.shape.legRight));
    CircuitCospan dp =
        makeDecorated(gf, std::move(shape), graphMap(p, d.decoration));
    if (behavior(d) != behavior(dp))
      return Failure{showDecorated(GraphGen{}, d),
                     decoratedSize(GraphGen{}, d)};
    return std::nullopt;
  });
  b.law("gradient-matches-laplacian", [&](Rng& rng, int) -> std::optional<Failure> {
    FinSet n = randomFinSet(rng, 6);
    LabeledGraph g = randomGraph(rng, n, 8);
    std::vector<Rat> phi = randomVector(rng, n.size());
    std::vector<Rat> grad = gradPower(g, phi);
    Matrix l = laplacian(g);
    for (std::uint32_t v = 0; v < n.size(); ++v) {
      Rat want(0);
      for (std::uint32_t w = 0; w < n.size(); ++w)
        want = want + Rat(2) * l.at(v, w) * phi[w];
      if (grad[v] != want)
        return Failure{showGraph(g), g.edges().size()};
    }
    return std::nullopt;
  });
  return b.finish();
}

// ---------------------------------------------------------------------------
// Planted faults: deliberately broken instances that the law harness must
// refute, with small shrunk counterexamples. A law outcome here *passes* when
// the fault is caught as expected, so a healthy build reports zero failures.

// Looks like a graph functor, but its tensor silently forgets the second
// argument's edges. Functorial and natural; only the symmetry and unit laws
// can see the difference.
struct EdgeDroppingGraphFunctor {
  using Decoration = LabeledGraph;

  bool valid(FinSet x, const Decoration& d) const { return d.vertices() == x; }
  Decoration mapAlong(const FinFunction& f, const Decoration& d) const {
    return graphMap(f, d);
  }
  Decoration tensor(const Decoration& a, const Decoration& c) const {
    return LabeledGraph(FinSet(a.vertices().size() + c.vertices().size()),
                        a.edges());
  }
  Decoration unit() const { return unitGraph(); }
  bool equal(const Decoration& a, const Decoration& c) const { return a == c; }
};

// Black-boxing with a spurious ground: pins the potential of node 0 whenever
// the carrier is nonempty. Breaks naturality (maps can move node 0) and
// monoidality (the tensor grounds one node, the parts ground two).
struct GroundedResTransformation {
  using Source = GraphFunctor;
  using Target = LinSubFunctor;

  Subspace component(FinSet x, const LabeledGraph& g) const {
    Subspace s = ResTransformation{}.component(x, g);
    if (x.empty()) return s;
    Matrix w(1, s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i)
      w.at(0, i) = s.basis().at(i, 0);
    Matrix combos = kernelBasis(w);
    return Subspace::fromGenerators(multiply(combos, s.basis()), s.ambient());
  }
};

SuiteReport plantedFaultsSuite(const SuiteOptions& opts) {
  SuiteReport tensorFault =
      checkFunctorLaws(EdgeDroppingGraphFunctor{}, GraphGen{},
                       "edge-dropping-tensor", opts.seed, opts.cases);
  SuiteReport groundFault =
      checkTransformationLaws(GroundedResTransformation{}, GraphGen{},
                              "grounded-res", opts.seed, opts.cases);

  auto outcome = [](const SuiteReport& r,
                    const std::string& law) -> const LawOutcome& {
    for (const LawOutcome& l : r.laws)
      if (l.law == law) return l;
    throw std::logic_error("law harness lost the law " + law);
  };
  auto caught = [&](const SuiteReport& r, const std::string& fault,
                    const std::string& law, std::size_t maxSize) {
    const LawOutcome& src = outcome(r, law);
    LawOutcome out;
    out.law = fault + "-fails-" + law;
    out.passed = !src.passed && !src.counterexample.empty() &&
                 src.counterexampleSize <= maxSize;
    out.counterexample = src.counterexample;
    out.counterexampleSize = src.counterexampleSize;
    return out;
  };
  auto clean = [&](const SuiteReport& r, const std::string& fault,
                   const std::vector<std::string>& laws) {
    LawOutcome out;
    out.law = fault + "-satisfies-the-rest";
    out.passed = true;
    for (const std::string& law : laws)
      out.passed = out.passed && outcome(r, law).passed;
    return out;
  };

  SuiteReport report{"planted-faults", opts.seed, opts.cases, {}};
  report.laws.push_back(
      caught(tensorFault, "edge-dropping-tensor", "tensor-symmetry", 10));
  report.laws.push_back(
      caught(tensorFault, "edge-dropping-tensor", "tensor-unit", 10));
  report.laws.push_back(clean(tensorFault, "edge-dropping-tensor",
                              {"map-identity", "map-composition",
                               "tensor-naturality", "tensor-associativity"}));
  report.laws.push_back(
      caught(groundFault, "grounded-res", "naturality", 4));
  report.laws.push_back(
      caught(groundFault, "grounded-res", "monoidality", 4));
  report.laws.push_back(clean(groundFault, "grounded-res", {"unit"}));
  return report;
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"graph-laws",
          "linsub-laws",
          "res-laws",
          "identity-transformation-laws",
          "planted-faults",
          "gluing-graph",
          "gluing-linsub",
          "functor-image",
          "axioms-cospan",
          "axioms-graph",
          "axioms-linsub",
          "plain-agreement",
          "semantics"};
}

SuiteReport runSuite(const std::string& name, const SuiteOptions& opts) {
  if (name == "graph-laws")
    return checkFunctorLaws(GraphFunctor{}, GraphGen{}, name, opts.seed,
                            opts.cases);
  if (name == "linsub-laws")
    return checkFunctorLaws(LinSubFunctor{}, LinSubGen{}, name, opts.seed,
                            opts.cases);
  if (name == "res-laws")
    return checkTransformationLaws(ResTransformation{}, GraphGen{}, name,
                                   opts.seed, opts.cases);
  if (name == "identity-transformation-laws")
    return checkTransformationLaws(IdentityTransformation<GraphFunctor>{},
                                   GraphGen{}, name, opts.seed, opts.cases);
  if (name == "planted-faults") return plantedFaultsSuite(opts);
  if (name == "gluing-graph")
    return gluingSuite("gluing-graph", GraphFunctor{}, GraphGen{}, opts);
  if (name == "gluing-linsub")
    return gluingSuite("gluing-linsub", LinSubFunctor{}, LinSubGen{}, opts);
  if (name == "functor-image") return functorImageSuite(opts);
  if (name == "axioms-cospan") return axiomsCospanSuite(opts);
  if (name == "axioms-graph")
    return axiomsDecoratedSuite("axioms-graph", GraphFunctor{}, GraphGen{},
                                opts);
  if (name == "axioms-linsub")
    return axiomsDecoratedSuite("axioms-linsub", LinSubFunctor{}, LinSubGen{},
                                opts);
  if (name == "plain-agreement") return plainAgreementSuite(opts);
  if (name == "semantics") return semanticsSuite(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> runAllSuites(const SuiteOptions& opts) {
  std::vector<SuiteReport> reports;
  for (const std::string& name : suiteNames())
    reports.push_back(runSuite(name, opts));
  return reports;
}

}  // namespace dcospan
