#pragma once

#include <cstddef>
#include <vector>

#include "dcospan/finset.hpp"
#include "dcospan/matrix.hpp"

namespace dcospan {

// A linear subspace of Q^ambient in canonical form: the basis is the RREF of
// any generating set, so equality of subspaces is equality of bases.
//
// When a subspace decorates a finite set N it lives in Q^(2|N|) with the
// fixed coordinate order (potentials phi_0..phi_{N-1}, currents
// iota_0..iota_{N-1}). Every blockwise operation below derives from that one
// convention.
class Subspace {
 public:
  Subspace() = default;  // the zero subspace of the zero-dimensional space

  static Subspace fromGenerators(const Matrix& generators,
                                 std::size_t ambient);
  static Subspace fromCanonicalRows(Matrix rref, std::size_t ambient);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const std::vector<Rat>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
};

// Throws on ambient mismatch; otherwise compares canonical bases.
bool subspaceEqual(const Subspace& a, const Subspace& b);

// Kernel of a homogeneous constraint system, projected onto the selected
// coordinates (in the given order), canonicalized. The workhorse behind
// linSubMap and circuit behaviors.
Subspace eliminateAndProject(const Matrix& constraints,
                             const std::vector<std::size_t>& keep);

// Pushforward of a subspace decoration along f: N -> M:
//   { (psi, kappa) : exists (phi, iota) in L with phi = psi o f
//                    and kappa(m) = sum over f(n) = m of iota(n) }.
// Potentials pull back, currents push forward.
Subspace linSubMap(const FinFunction& f, const Subspace& l);

// Direct sum, re-interleaved into the (all phi, then all iota) convention of
// the combined ambient space.
Subspace subspaceTensor(const Subspace& a, const Subspace& b);

// The unique subspace of the zero-dimensional space.
Subspace subspaceUnit();

// Decoration functor instance: finite set N carries the subspaces of
// Q^(2|N|).
struct LinSubFunctor {
  using Decoration = Subspace;

  bool valid(FinSet x, const Decoration& d) const {
    return d.ambient() == 2 * static_cast<std::size_t>(x.size());
  }
  Decoration mapAlong(const FinFunction& f, const Decoration& d) const;
  Decoration tensor(const Decoration& a, const Decoration& b) const {
    return subspaceTensor(a, b);
  }
  Decoration unit() const { return subspaceUnit(); }
  bool equal(const Decoration& a, const Decoration& b) const {
    return subspaceEqual(a, b);
  }
};

}  // namespace dcospan
