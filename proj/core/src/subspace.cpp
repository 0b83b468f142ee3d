#include "dcospan/subspace.hpp"

#include <stdexcept>

namespace dcospan {

Subspace Subspace::fromGenerators(const Matrix& generators,
                                  std::size_t ambient) {
  if (generators.cols() != ambient)
    throw std::invalid_argument("subspace generators have wrong width");
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = rowReduce(generators);
  return s;
}

Subspace Subspace::fromCanonicalRows(Matrix rref, std::size_t ambient) {
  if (rref.cols() != ambient)
    throw std::invalid_argument("subspace rows have wrong width");
  if (rowReduce(rref) != rref)
    throw std::invalid_argument("subspace rows are not in reduced form");
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(rref);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identityMatrix(ambient);
  return s;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("contains: ambient mismatch");
  std::vector<Rat> residual = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (basis_.at(i, p).isZero()) ++p;
    if (residual[p].isZero()) continue;
    const Rat factor = residual[p];
    for (std::size_t c = p; c < ambient_; ++c)
      residual[c] -= factor * basis_.at(i, c);
  }
  for (const Rat& x : residual)
    if (!x.isZero()) return false;
  return true;
}

bool subspaceEqual(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspaceEqual: ambient spaces differ");
  return a == b;
}

Subspace eliminateAndProject(const Matrix& constraints,
                             const std::vector<std::size_t>& keep) {
  for (std::size_t c : keep)
    if (c >= constraints.cols())
      throw std::invalid_argument("eliminateAndProject: bad coordinate");
  const Matrix solutions = kernelBasis(constraints);
  Matrix projected(solutions.rows(), keep.size());
  for (std::size_t i = 0; i < solutions.rows(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      projected.at(i, j) = solutions.at(i, keep[j]);
  return Subspace::fromGenerators(projected, keep.size());
}

Subspace linSubMap(const FinFunction& f, const Subspace& l) {
  const std::size_t n = f.dom().size();
  const std::size_t m = f.cod().size();
  if (l.ambient() != 2 * n)
    throw std::invalid_argument("linSubMap: subspace does not live on dom");

  // Bijections act by plain coordinate relabeling; skipping the existential
  // elimination keeps isomorphism transport cheap. Validated against the
  // general path by tests.
  if (f.isBijection()) {
    Matrix moved(l.dimension(), 2 * m);
    for (std::size_t i = 0; i < l.dimension(); ++i)
      for (std::size_t v = 0; v < n; ++v) {
        moved.at(i, f(v)) = l.basis().at(i, v);
        moved.at(i, m + f(v)) = l.basis().at(i, n + v);
      }
    return Subspace::fromGenerators(moved, 2 * m);
  }

  // Variables: psi (m), kappa (m), c (one coefficient per generator of l).
  // The element of l is c * basis; constrain its phi block to psi o f and
  // kappa to the fiberwise sums of its iota block.
  const std::size_t k = l.dimension();
  const std::size_t cols = 2 * m + k;
  Matrix sys(n + m, cols);
  for (std::size_t v = 0; v < n; ++v) {
    sys.at(v, f(v)) -= 1;  // -psi(f(v))
    for (std::size_t g = 0; g < k; ++g)
      sys.at(v, 2 * m + g) = l.basis().at(g, v);
  }
  for (std::size_t w = 0; w < m; ++w) sys.at(n + w, m + w) = 1;  // +kappa(w)
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t g = 0; g < k; ++g)
      sys.at(n + f(v), 2 * m + g) -= l.basis().at(g, n + v);

  std::vector<std::size_t> keep(2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) keep[i] = i;
  return eliminateAndProject(sys, keep);
}

Subspace subspaceTensor(const Subspace& a, const Subspace& b) {
  if (a.ambient() % 2 != 0 || b.ambient() % 2 != 0)
    throw std::invalid_argument("subspaceTensor: odd ambient dimension");
  const std::size_t n = a.ambient() / 2;
  const std::size_t m = b.ambient() / 2;
  Matrix gens(a.dimension() + b.dimension(), 2 * (n + m));
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t v = 0; v < n; ++v) {
      gens.at(i, v) = a.basis().at(i, v);
      gens.at(i, n + m + v) = a.basis().at(i, n + v);
    }
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t v = 0; v < m; ++v) {
      gens.at(a.dimension() + i, n + v) = b.basis().at(i, v);
      gens.at(a.dimension() + i, n + m + n + v) = b.basis().at(i, m + v);
    }
  return Subspace::fromGenerators(gens, 2 * (n + m));
}

Subspace subspaceUnit() { return Subspace::zero(0); }

Subspace LinSubFunctor::mapAlong(const FinFunction& f,
                                 const Decoration& d) const {
  return linSubMap(f, d);
}

}  // namespace dcospan
