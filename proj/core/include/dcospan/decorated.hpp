#pragma once

#include <optional>

#include "dcospan/cospan.hpp"
#include "dcospan/decoration.hpp"
#include "dcospan/finset.hpp"

namespace dcospan {

// An open network: a cospan of finite sets whose apex carries a decoration
// (the actual structure living on the glued middle), for any decoration
// functor F.
template <DecorationFunctor F>
struct DecoratedCospan {
  Cospan shape;
  typename F::Decoration decoration;
};

struct DecoratedIso {
  FinFunction bijection;
};

template <DecorationFunctor F>
DecoratedCospan<F> makeDecorated(const F& f, Cospan shape,
                                 typename F::Decoration decoration) {
  if (!f.valid(shape.apex, decoration))
    throw std::invalid_argument("decoration does not live on the apex");
  return {std::move(shape), std::move(decoration)};
}

// The empty decoration on X: the unit pushed forward along the unique map
// out of the empty set.
template <DecorationFunctor F>
typename F::Decoration emptyDecoration(const F& f, FinSet x) {
  return f.mapAlong(bang(x), f.unit());
}

template <DecorationFunctor F>
DecoratedCospan<F> embedCospan(const F& f, const Cospan& c) {
  return {c, emptyDecoration(f, c.apex)};
}

template <DecorationFunctor F>
DecoratedCospan<F> identityDecorated(const F& f, FinSet x) {
  return embedCospan(f, identityCospan(x));
}

// Glue along the shared foot: pushout of shapes, decorations combined and
// pushed along the two apex injections.
template <DecorationFunctor F>
DecoratedCospan<F> composeDecorated(const F& f, const DecoratedCospan<F>& d1,
                                    const DecoratedCospan<F>& d2) {
  GluedCospan glued = composeWithGlue(d1.shape, d2.shape);
  typename F::Decoration s =
      f.mapAlong(copair(glued.intoLeft, glued.intoRight),
                 f.tensor(d1.decoration, d2.decoration));
  return {std::move(glued.cospan), std::move(s)};
}

template <DecorationFunctor F>
DecoratedCospan<F> tensorDecorated(const F& f, const DecoratedCospan<F>& d1,
                                   const DecoratedCospan<F>& d2) {
  return {tensorCospan(d1.shape, d2.shape),
          f.tensor(d1.decoration, d2.decoration)};
}

template <DecorationFunctor F>
struct FrobeniusDecorated {
  DecoratedCospan<F> merge, create, split, discard;
};

template <DecorationFunctor F>
FrobeniusDecorated<F> frobeniusDecorated(const F& f, FinSet x) {
  FrobeniusGenerators g = frobeniusGenerators(x);
  return {embedCospan(f, g.merge), embedCospan(f, g.create),
          embedCospan(f, g.split), embedCospan(f, g.discard)};
}

// Reflection; the decoration rides along unchanged. Agrees with the
// compact-closed dual below up to isomorphism (checked per instance by the
// suites, since only the undecorated case is a theorem).
template <DecorationFunctor F>
DecoratedCospan<F> daggerDecorated(const F&, const DecoratedCospan<F>& d) {
  return {opposite(d.shape), d.decoration};
}

// The general dual formula evaluated with decorated operations:
// (ev ox 1) o (1 ox d ox 1) o (1 ox coev).
template <DecorationFunctor F>
DecoratedCospan<F> dualDecorated(const F& f, const DecoratedCospan<F>& d) {
  const FinSet x = d.shape.footLeft;
  const FinSet y = d.shape.footRight;
  const FrobeniusDecorated<F> fx = frobeniusDecorated(f, x);
  const FrobeniusDecorated<F> fy = frobeniusDecorated(f, y);
  const DecoratedCospan<F> coev = composeDecorated(f, fx.create, fx.split);
  const DecoratedCospan<F> ev = composeDecorated(f, fy.merge, fy.discard);
  const DecoratedCospan<F> idX = identityDecorated(f, x);
  const DecoratedCospan<F> idY = identityDecorated(f, y);
  const DecoratedCospan<F> step1 = tensorDecorated(f, idY, coev);
  const DecoratedCospan<F> step2 =
      tensorDecorated(f, idY, tensorDecorated(f, d, idX));
  const DecoratedCospan<F> step3 = tensorDecorated(f, ev, idX);
  return composeDecorated(f, composeDecorated(f, step1, step2), step3);
}

// Isomorphism of decorated cospans: a cospan isomorphism along which the
// decoration transports onto the other decoration. Enumerates cospan isos
// (the free block permutes) until the transport matches.
template <DecorationFunctor F>
std::optional<DecoratedIso> isoDecorated(
    const F& f, const DecoratedCospan<F>& d1, const DecoratedCospan<F>& d2,
    std::uint64_t budget = kDefaultIsoBudget) {
  std::optional<CospanIso> iso = forEachCospanIso(
      d1.shape, d2.shape,
      [&](const CospanIso& candidate) {
        return f.equal(f.mapAlong(candidate.bijection, d1.decoration),
                       d2.decoration);
      },
      budget);
  if (!iso) return std::nullopt;
  return DecoratedIso{std::move(iso->bijection)};
}

// The functor between decorated-cospan categories induced by a monoidal
// natural transformation (on decorations) and a coproduct-preserving
// endofunctor (on the underlying sets).
template <DecorationTransformation T, Endofunctor A>
DecoratedCospan<typename T::Target> applyFunctor(
    const T& t, const A& a, const DecoratedCospan<typename T::Source>& d) {
  Cospan shape = makeCospan(
      a.onObject(d.shape.footLeft), a.onObject(d.shape.footRight),
      a.onObject(d.shape.apex), a.onMorphism(d.shape.legLeft),
      a.onMorphism(d.shape.legRight));
  return {std::move(shape), t.component(d.shape.apex, d.decoration)};
}

}  // namespace dcospan
