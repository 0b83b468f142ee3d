#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "dcospan/finset.hpp"

namespace dcospan {

// An open "interface into apex" picture: two feet mapped into a shared apex.
// Cospans from X to Y compose by pushout over the shared foot.
struct Cospan {
  FinSet footLeft, footRight, apex;
  FinFunction legLeft;   // footLeft  -> apex
  FinFunction legRight;  // footRight -> apex

  friend bool operator==(const Cospan& a, const Cospan& b) {
    return a.footLeft == b.footLeft && a.footRight == b.footRight &&
           a.apex == b.apex && a.legLeft == b.legLeft &&
           a.legRight == b.legRight;
  }
  friend bool operator!=(const Cospan& a, const Cospan& b) {
    return !(a == b);
  }
};

Cospan makeCospan(FinSet left, FinSet right, FinSet apex, FinFunction legLeft,
                  FinFunction legRight);

// f: X -> Y as the cospan X --f--> Y <--id-- Y.
Cospan fromFunction(const FinFunction& f);

Cospan identityCospan(FinSet x);

// Composite plus the pushout injections of the two apexes, which downstream
// decoration gluing needs.
struct GluedCospan {
  Cospan cospan;
  FinFunction intoLeft;   // c1.apex -> composite apex
  FinFunction intoRight;  // c2.apex -> composite apex
};

GluedCospan composeWithGlue(const Cospan& c1, const Cospan& c2);
Cospan composeCospan(const Cospan& c1, const Cospan& c2);

Cospan tensorCospan(const Cospan& c1, const Cospan& c2);

// Reflection: swap the feet and legs.
Cospan opposite(const Cospan& c);

// The special commutative Frobenius structure carried by every object:
//   merge  = X+X -> X <- X    (multiplication)
//   create = 0   -> X <- X    (unit)
//   split/discard are their reflections.
struct FrobeniusGenerators {
  Cospan merge;    // mu
  Cospan create;   // eta
  Cospan split;    // delta
  Cospan discard;  // epsilon
};

FrobeniusGenerators frobeniusGenerators(FinSet x);

// Coherence isomorphisms of (FinSet, +) embedded as cospans. The skeleton
// makes associator and unitors literal identities; only the braiding moves
// elements.
enum class StructureKind { Associator, LeftUnitor, RightUnitor, Braiding };

Cospan structureCospan(StructureKind kind, FinSet a, FinSet b = FinSet(0),
                       FinSet c = FinSet(0));

// Compact-closed dual Y -> X of c: X -> Y, computed from the Frobenius
// generators as (ev_Y ox 1_X) o (1_Y ox c ox 1_X) o (1_Y ox coev_X).
// Agrees with opposite(c) up to isomorphism.
Cospan dual(const Cospan& c);

// Witness that two cospans on the same feet are isomorphic: a bijection of
// apexes commuting with both legs.
struct CospanIso {
  FinFunction bijection;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

// Exact isomorphism search. Apex elements are grouped by their fibers under
// both legs: any element touched by a leg has a forced partner (fibers of
// distinct elements are disjoint), so the search only permutes elements
// outside both leg images. Throws BudgetExceeded past `budget` visited
// candidates.
std::optional<CospanIso> isoSearch(const Cospan& c1, const Cospan& c2,
                                   std::uint64_t budget = kDefaultIsoBudget);

// Enumerates cospan isomorphisms until `accept` returns true; returns the
// accepted witness, or nullopt when the candidates are exhausted.
std::optional<CospanIso> forEachCospanIso(
    const Cospan& c1, const Cospan& c2,
    const std::function<bool(const CospanIso&)>& accept,
    std::uint64_t budget = kDefaultIsoBudget);

}  // namespace dcospan
