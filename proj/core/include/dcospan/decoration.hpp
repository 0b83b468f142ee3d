#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dcospan/finset.hpp"
#include "dcospan/gen.hpp"

namespace dcospan {

// A "decoration functor" assigns to every finite set N a set of decorations
// (graphs on N, subspaces over N, ...) together with pushforward along
// functions, a combination of decorations on disjoint sets, and a unit
// decoration on the empty set. The laws below make it a lax symmetric
// monoidal functor (FinSet, +) -> (Set, x); both targets are plain value
// sets, so coherence maps act trivially at the data level and only the five
// operations remain.
template <typename F>
concept DecorationFunctor =
    requires(const F& f, const typename F::Decoration& d, const FinFunction& m,
             FinSet x) {
      typename F::Decoration;
      { f.valid(x, d) } -> std::same_as<bool>;
      { f.mapAlong(m, d) } -> std::same_as<typename F::Decoration>;
      { f.tensor(d, d) } -> std::same_as<typename F::Decoration>;
      { f.unit() } -> std::same_as<typename F::Decoration>;
      { f.equal(d, d) } -> std::same_as<bool>;
    };

// A monoidal natural transformation between two decoration functors: one
// component per finite set, commuting with pushforward and with tensor.
template <typename T>
concept DecorationTransformation =
    requires(const T& t, FinSet x, const typename T::Source::Decoration& d) {
      requires DecorationFunctor<typename T::Source>;
      requires DecorationFunctor<typename T::Target>;
      { t.component(x, d) } -> std::same_as<typename T::Target::Decoration>;
    };

template <DecorationFunctor F>
struct IdentityTransformation {
  using Source = F;
  using Target = F;

  typename F::Decoration component(FinSet,
                                   const typename F::Decoration& d) const {
    return d;
  }
};

// Decorations carrying no information: on N, the unique function out of the
// empty set. Decorated cospans over this functor are plain cospans in
// disguise, which the plain-agreement suite exploits.
struct UnitFunctor {
  using Decoration = FinFunction;

  bool valid(FinSet x, const Decoration& d) const {
    return d.dom().empty() && d.cod() == x;
  }
  Decoration mapAlong(const FinFunction& f, const Decoration& d) const {
    return compose(f, d);
  }
  Decoration tensor(const Decoration& a, const Decoration& b) const {
    return bang(FinSet(a.cod().size() + b.cod().size()));
  }
  Decoration unit() const { return bang(FinSet(0)); }
  bool equal(const Decoration& a, const Decoration& b) const {
    return a == b;
  }
};

// Coproduct-preserving endofunctor of (FinSet, +); the seam through which
// decorated cospans can be re-indexed. Only the identity instance ships.
template <typename A>
concept Endofunctor = requires(const A& a, FinSet x, FinSet y,
                               const FinFunction& f) {
  { a.onObject(x) } -> std::same_as<FinSet>;
  { a.onMorphism(f) } -> std::same_as<FinFunction>;
  // chosen isomorphism A(x) + A(y) -> A(x + y)
  { a.coherence(x, y) } -> std::same_as<FinFunction>;
};

struct IdentityEndofunctor {
  FinSet onObject(FinSet x) const { return x; }
  FinFunction onMorphism(const FinFunction& f) const { return f; }
  FinFunction coherence(FinSet x, FinSet y) const {
    return identity(FinSet(x.size() + y.size()));
  }
};

// ---------------------------------------------------------------------------
// Law reports

struct LawOutcome {
  std::string law;
  bool passed = true;
  // Shrunk counterexample (failed laws) or informational payload.
  std::string counterexample;
  // Set sizes plus decoration sizes of the shrunk case; lets callers assert
  // that shrinking actually got small.
  std::size_t counterexampleSize = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<LawOutcome> laws;

  bool ok() const {
    for (const LawOutcome& l : laws)
      if (!l.passed) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Shrinking: first re-generate whole cases at the smallest failing size
// bound, then greedily apply one-step case shrinks while the law keeps
// failing.

template <typename Case>
struct ShrinkOps {
  std::function<Case(Rng&, std::uint32_t)> regenerate;
  std::function<bool(const Case&)> fails;
  std::function<std::vector<Case>(const Case&)> steps;
};

template <typename Case>
Case shrinkFailure(Case found, std::uint64_t streamSeed, std::uint32_t maxSet,
                   const ShrinkOps<Case>& ops) {
  constexpr int kAttemptsPerBound = 40;
  for (std::uint32_t bound = 0; bound <= maxSet; ++bound) {
    bool adopted = false;
    for (int attempt = 0; attempt < kAttemptsPerBound && !adopted; ++attempt) {
      Rng rng(mixSeed(streamSeed, (bound << 8) | std::uint32_t(attempt)));
      Case candidate = ops.regenerate(rng, bound);
      if (ops.fails(candidate)) {
        found = std::move(candidate);
        adopted = true;
      }
    }
    if (adopted) break;
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (Case& candidate : ops.steps(found)) {
      if (ops.fails(candidate)) {
        found = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Functor laws

template <DecorationFunctor F>
struct FunctorLawCase {
  FinSet x, y, z, x2, y2;
  FinFunction f;   // x  -> y
  FinFunction g;   // y  -> z
  FinFunction f2;  // x2 -> y2
  typename F::Decoration dx, dy, dz, dx2;
};

namespace detail {

inline FinSet randomNonemptyTarget(Rng& rng, FinSet source,
                                   std::uint32_t maxSet) {
  if (source.empty()) return randomFinSet(rng, maxSet);
  return FinSet(1 + randBelow(rng, maxSet > 0 ? maxSet : 1));
}

template <DecorationFunctor F, typename Gen>
FunctorLawCase<F> randomFunctorLawCase(const Gen& gen, Rng& rng,
                                       std::uint32_t maxSet) {
  FunctorLawCase<F> c;
  c.x = randomFinSet(rng, maxSet);
  c.y = randomNonemptyTarget(rng, c.x, maxSet);
  c.z = randomNonemptyTarget(rng, c.y, maxSet);
  c.x2 = randomFinSet(rng, maxSet);
  c.y2 = randomNonemptyTarget(rng, c.x2, maxSet);
  c.f = randomFinFunction(rng, c.x, c.y);
  c.g = randomFinFunction(rng, c.y, c.z);
  c.f2 = randomFinFunction(rng, c.x2, c.y2);
  c.dx = gen.decoration(rng, c.x);
  c.dy = gen.decoration(rng, c.y);
  c.dz = gen.decoration(rng, c.z);
  c.dx2 = gen.decoration(rng, c.x2);
  return c;
}

template <DecorationFunctor F, typename Gen>
std::string showFunctorLawCase(const Gen& gen, const FunctorLawCase<F>& c) {
  std::ostringstream os;
  os << "f=" << showFunction(c.f) << " g=" << showFunction(c.g)
     << " f2=" << showFunction(c.f2) << " dx=" << gen.show(c.dx)
     << " dy=" << gen.show(c.dy) << " dz=" << gen.show(c.dz)
     << " dx2=" << gen.show(c.dx2);
  return os.str();
}

template <DecorationFunctor F, typename Gen>
std::size_t functorLawCaseSize(const Gen& gen, const FunctorLawCase<F>& c) {
  return c.x.size() + c.y.size() + c.z.size() + c.x2.size() + c.y2.size() +
         gen.size(c.dx) + gen.size(c.dy) + gen.size(c.dz) + gen.size(c.dx2);
}

template <DecorationFunctor F, typename Gen>
std::vector<FunctorLawCase<F>> functorLawCaseSteps(const Gen& gen,
                                                   const FunctorLawCase<F>& c) {
  std::vector<FunctorLawCase<F>> out;
  for (auto& d : gen.shrink(c.dx)) {
    out.push_back(c);
    out.back().dx = d;
  }
  for (auto& d : gen.shrink(c.dy)) {
    out.push_back(c);
    out.back().dy = d;
  }
  for (auto& d : gen.shrink(c.dz)) {
    out.push_back(c);
    out.back().dz = d;
  }
  for (auto& d : gen.shrink(c.dx2)) {
    out.push_back(c);
    out.back().dx2 = d;
  }
  return out;
}

template <typename Case>
using NamedLaw = std::pair<std::string, std::function<bool(const Case&)>>;

// Shared driver: run every law over a deterministic case stream, remember
// each law's first failing case, shrink it, report.
template <typename Case>
SuiteReport runLaws(std::string suiteName, std::uint64_t seed, int cases,
                    std::uint32_t maxSet,
                    const std::function<Case(Rng&, std::uint32_t)>& regen,
                    const std::vector<NamedLaw<Case>>& laws,
                    const std::function<std::vector<Case>(const Case&)>& steps,
                    const std::function<std::string(const Case&)>& show,
                    const std::function<std::size_t(const Case&)>& size) {
  std::vector<std::optional<Case>> firstFailure(laws.size());
  for (int i = 0; i < cases; ++i) {
    Rng rng(mixSeed(seed, std::uint64_t(i)));
    Case c = regen(rng, maxSet);
    for (std::size_t j = 0; j < laws.size(); ++j)
      if (!firstFailure[j] && !laws[j].second(c)) firstFailure[j] = c;
  }
  SuiteReport report{std::move(suiteName), seed, cases, {}};
  for (std::size_t j = 0; j < laws.size(); ++j) {
    LawOutcome outcome;
    outcome.law = laws[j].first;
    if (firstFailure[j]) {
      ShrinkOps<Case> ops{regen,
                          [&](const Case& c) { return !laws[j].second(c); },
                          steps};
      Case shrunk = shrinkFailure(*firstFailure[j],
                                  mixSeed(seed, 0xfa11 + j), maxSet, ops);
      outcome.passed = false;
      outcome.counterexample = show(shrunk);
      outcome.counterexampleSize = size(shrunk);
    }
    report.laws.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace detail

template <DecorationFunctor F, typename Gen>
SuiteReport checkFunctorLaws(const F& f, const Gen& gen, std::string suiteName,
                             std::uint64_t seed, int cases,
                             std::uint32_t maxSet = 4) {
  using Case = FunctorLawCase<F>;
  std::vector<detail::NamedLaw<Case>> laws;
  laws.emplace_back("map-identity", [&f](const Case& c) {
    return f.equal(f.mapAlong(identity(c.x), c.dx), c.dx);
  });
  laws.emplace_back("map-composition", [&f](const Case& c) {
    return f.equal(f.mapAlong(compose(c.g, c.f), c.dx),
                   f.mapAlong(c.g, f.mapAlong(c.f, c.dx)));
  });
  laws.emplace_back("tensor-naturality", [&f](const Case& c) {
    return f.equal(f.mapAlong(sumMap(c.f, c.f2), f.tensor(c.dx, c.dx2)),
                   f.tensor(f.mapAlong(c.f, c.dx), f.mapAlong(c.f2, c.dx2)));
  });
  laws.emplace_back("tensor-associativity", [&f](const Case& c) {
    return f.equal(f.tensor(f.tensor(c.dx, c.dy), c.dz),
                   f.tensor(c.dx, f.tensor(c.dy, c.dz)));
  });
  laws.emplace_back("tensor-unit", [&f](const Case& c) {
    return f.equal(f.tensor(c.dx, f.unit()), c.dx) &&
           f.equal(f.tensor(f.unit(), c.dx), c.dx);
  });
  laws.emplace_back("tensor-symmetry", [&f](const Case& c) {
    return f.equal(f.mapAlong(braidingMap(c.x, c.y), f.tensor(c.dx, c.dy)),
                   f.tensor(c.dy, c.dx));
  });
  return detail::runLaws<Case>(
      std::move(suiteName), seed, cases, maxSet,
      [&gen](Rng& rng, std::uint32_t bound) {
        return detail::randomFunctorLawCase<F>(gen, rng, bound);
      },
      laws,
      [&gen](const Case& c) { return detail::functorLawCaseSteps<F>(gen, c); },
      [&gen](const Case& c) { return detail::showFunctorLawCase<F>(gen, c); },
      [&gen](const Case& c) { return detail::functorLawCaseSize<F>(gen, c); });
}

// ---------------------------------------------------------------------------
// Transformation laws

template <DecorationFunctor F>
struct TransformationLawCase {
  FinSet x, y;
  FinFunction f;  // x -> y
  typename F::Decoration dx, dy;
};

template <DecorationTransformation T, typename Gen>
SuiteReport checkTransformationLaws(const T& t, const Gen& gen,
                                    std::string suiteName, std::uint64_t seed,
                                    int cases, std::uint32_t maxSet = 4) {
  using Src = typename T::Source;
  using Tgt = typename T::Target;
  using Case = TransformationLawCase<Src>;
  const Src src{};
  const Tgt tgt{};

  auto regen = [&gen](Rng& rng, std::uint32_t bound) {
    Case c;
    c.x = randomFinSet(rng, bound);
    c.y = detail::randomNonemptyTarget(rng, c.x, bound);
    c.f = randomFinFunction(rng, c.x, c.y);
    c.dx = gen.decoration(rng, c.x);
    c.dy = gen.decoration(rng, c.y);
    return c;
  };
  std::vector<detail::NamedLaw<Case>> laws;
  laws.emplace_back("naturality", [&](const Case& c) {
    return tgt.equal(t.component(c.y, src.mapAlong(c.f, c.dx)),
                     tgt.mapAlong(c.f, t.component(c.x, c.dx)));
  });
  laws.emplace_back("monoidality", [&](const Case& c) {
    FinSet both(c.x.size() + c.y.size());
    return tgt.equal(t.component(both, src.tensor(c.dx, c.dy)),
                     tgt.tensor(t.component(c.x, c.dx),
                                t.component(c.y, c.dy)));
  });
  laws.emplace_back("unit", [&](const Case&) {
    return tgt.equal(t.component(FinSet(0), src.unit()), tgt.unit());
  });
  return detail::runLaws<Case>(
      std::move(suiteName), seed, cases, maxSet, regen, laws,
      [&gen](const Case& c) {
        std::vector<Case> out;
        for (auto& d : gen.shrink(c.dx)) {
          out.push_back(c);
          out.back().dx = d;
        }
        for (auto& d : gen.shrink(c.dy)) {
          out.push_back(c);
          out.back().dy = d;
        }
        return out;
      },
      [&gen](const Case& c) {
        std::ostringstream os;
        os << "f=" << showFunction(c.f) << " dx=" << gen.show(c.dx)
           << " dy=" << gen.show(c.dy);
        return os.str();
      },
      [&gen](const Case& c) {
        return std::size_t(c.x.size()) + c.y.size() + gen.size(c.dx) +
               gen.size(c.dy);
      });
}

}  // namespace dcospan
