#include <cstddef>
#include <vector>

#include "dcospan/gen.hpp"
#include "dcospan/matrix.hpp"
#include "dcospan/rational.hpp"
#include "dcospan/subspace.hpp"
#include "doctest.h"

using namespace dcospan;

namespace {

Matrix randomMatrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::vector<Rat> row = randomVector(rng, cols);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

bool inRowSpan(const Matrix& m, const std::vector<Rat>& v) {
  const Matrix r = rowReduce(m);
  Matrix extended = r;
  extended.appendRow(v);
  return rowReduce(extended).rows() == r.rows();
}

std::size_t pivotColumn(const Matrix& m, std::size_t row) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.at(row, c).isZero()) return c;
  return m.cols();
}

// Does some v satisfy constraints*v = 0 with v pinned to `target` on the
// kept coordinates? Decided by consistency of the affine system, which the
// RREF exposes as "no pivot in the constant column".
bool liftable(const Matrix& constraints, const std::vector<std::size_t>& keep,
              const std::vector<Rat>& target) {
  const std::size_t n = constraints.cols();
  Matrix sys(0, n + 1);
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    std::vector<Rat> row = constraints.row(r);
    row.push_back(Rat(0));
    sys.appendRow(row);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<Rat> row(n + 1);
    row[keep[i]] = Rat(1);
    row[n] = target[i];
    sys.appendRow(row);
  }
  const Matrix r = rowReduce(sys);
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (pivotColumn(r, i) == n) return false;
  return true;
}

// Membership-based pushforward, used to cross-check linSubMap. Unknowns are
// (psi, kappa, phi, iota); membership of (phi, iota) in l is imposed through
// the annihilator of l's basis rather than the coefficient parametrization
// the production code uses.
Subspace pushforwardByAnnihilator(const FinFunction& f, const Subspace& l) {
  const std::size_t n = f.dom().size();
  const std::size_t m = f.cod().size();
  const Matrix ann = kernelBasis(l.basis());
  Matrix sys(0, 2 * m + 2 * n);
  for (std::size_t r = 0; r < ann.rows(); ++r) {
    std::vector<Rat> row(2 * m + 2 * n);
    for (std::size_t c = 0; c < 2 * n; ++c) row[2 * m + c] = ann.at(r, c);
    sys.appendRow(row);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rat> row(2 * m + 2 * n);
    row[2 * m + v] = Rat(1);
    row[f(static_cast<std::uint32_t>(v))] -= Rat(1);
    sys.appendRow(row);
  }
  for (std::size_t w = 0; w < m; ++w) {
    std::vector<Rat> row(2 * m + 2 * n);
    row[m + w] = Rat(1);
    for (std::size_t v = 0; v < n; ++v)
      if (f(static_cast<std::uint32_t>(v)) == w)
        row[2 * m + n + v] -= Rat(1);
    sys.appendRow(row);
  }
  std::vector<std::size_t> keep(2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) keep[i] = i;
  return eliminateAndProject(sys, keep);
}

}  // namespace

TEST_SUITE("linear-algebra") {

TEST_CASE("rationals normalize, print, and parse consistently") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat(-6, -3).str() == "2");
  CHECK(Rat::parse("13/10") == Rat(13, 10));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse(Rat(22, 7).str()) == Rat(22, 7));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(3, 4) * Rat(2, 3) == Rat(1, 2));
  CHECK(Rat(5, 7).reciprocal() == Rat(7, 5));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(0).reciprocal(), std::invalid_argument);
  for (const char* bad : {"", " 1", "1 ", "+1", "1.5", "1/0", "1/-2", "2/4/8",
                          "0x2", "a"})
    CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
}

TEST_CASE("rowReduce fixtures") {
  const Matrix a = rowReduce(Matrix::fromRows({{Rat(2), Rat(4)},
                                               {Rat(1), Rat(2)}}, 2));
  CHECK(a == Matrix::fromRows({{Rat(1), Rat(2)}}, 2));
  const Matrix b = rowReduce(Matrix::fromRows({{Rat(0), Rat(1)},
                                               {Rat(1), Rat(0)}}, 2));
  CHECK(b == Matrix::identityMatrix(2));
  const Matrix c = rowReduce(Matrix::fromRows(
      {{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)},
       {Rat(7), Rat(8), Rat(9)}}, 3));
  CHECK(c == Matrix::fromRows(
                 {{Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(2)}}, 3));
  CHECK(rowReduce(Matrix(3, 4)).rows() == 0);
}

TEST_CASE("rowReduce produces a canonical reduced form") {
  Rng rng(301);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = randBelow(rng, 5), cols = randBelow(rng, 6);
    const Matrix m = randomMatrix(rng, rows, cols);
    const Matrix r = rowReduce(m);
    CHECK(rowReduce(r) == r);
    std::size_t last = 0;
    bool first = true;
    for (std::size_t row = 0; row < r.rows(); ++row) {
      const std::size_t p = pivotColumn(r, row);
      REQUIRE(p < r.cols());  // no zero rows survive
      CHECK(r.at(row, p) == Rat(1));
      if (!first) CHECK(p > last);
      for (std::size_t other = 0; other < r.rows(); ++other)
        if (other != row) CHECK(r.at(other, p).isZero());
      last = p;
      first = false;
    }
    // Same row space in both directions.
    for (std::size_t row = 0; row < m.rows(); ++row)
      CHECK(inRowSpan(r, m.row(row)));
    for (std::size_t row = 0; row < r.rows(); ++row)
      CHECK(inRowSpan(m, r.row(row)));
    // Canonical under row shuffling and rescaling.
    Matrix shuffled(0, m.cols());
    for (std::size_t row = m.rows(); row-- > 0;) {
      std::vector<Rat> scaled = m.row(row);
      const Rat factor(1 + static_cast<long>(randBelow(rng, 5)), 3);
      for (Rat& x : scaled) x *= factor;
      shuffled.appendRow(scaled);
    }
    CHECK(rowReduce(shuffled) == r);
  }
}

TEST_CASE("kernelBasis spans exactly the null space") {
  CHECK(kernelBasis(Matrix::fromRows({{Rat(1), Rat(2)}}, 2)) ==
        Matrix::fromRows({{Rat(-2), Rat(1)}}, 2));
  Rng rng(302);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = randBelow(rng, 4), cols = randBelow(rng, 6);
    const Matrix m = randomMatrix(rng, rows, cols);
    const Matrix k = kernelBasis(m);
    // Every kernel row is annihilated by m.
    for (std::size_t r = 0; r < k.rows(); ++r)
      for (std::size_t c = 0; c < m.rows(); ++c) {
        Rat dot(0);
        for (std::size_t j = 0; j < cols; ++j)
          dot += m.at(c, j) * k.at(r, j);
        CHECK(dot.isZero());
      }
    // Rank-nullity, and the kernel rows are independent.
    CHECK(rowReduce(m).rows() + k.rows() == cols);
    CHECK(rowReduce(k).rows() == k.rows());
  }
}

TEST_CASE("solveExact solves invertible systems and flags singular ones") {
  CHECK(!solveExact(Matrix::fromRows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2),
                    Matrix(2, 1)));
  Rng rng(303);
  int solved = 0;
  while (solved < 100) {
    const std::size_t n = 1 + randBelow(rng, 4);
    const Matrix a = randomMatrix(rng, n, n);
    if (rowReduce(a).rows() < n) {
      CHECK(!solveExact(a, Matrix(n, 2)));
      continue;
    }
    const Matrix b = randomMatrix(rng, n, 2);
    const std::optional<Matrix> x = solveExact(a, b);
    REQUIRE(x.has_value());
    CHECK(multiply(a, *x) == b);
    ++solved;
  }
}

TEST_CASE("multiply is associative and unital") {
  Rng rng(304);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = randBelow(rng, 4), m = randBelow(rng, 4);
    const std::size_t p = randBelow(rng, 4), q = randBelow(rng, 4);
    const Matrix a = randomMatrix(rng, n, m), b = randomMatrix(rng, m, p);
    const Matrix c = randomMatrix(rng, p, q);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(Matrix::identityMatrix(n), a) == a);
    CHECK(multiply(a, Matrix::identityMatrix(m)) == a);
  }
}

TEST_CASE("subspaces are canonical in their generators") {
  Rng rng(305);
  for (int i = 0; i < 100; ++i) {
    const std::size_t ambient = randBelow(rng, 6);
    const Matrix gens = randomMatrix(rng, randBelow(rng, 4), ambient);
    const Subspace s = Subspace::fromGenerators(gens, ambient);
    // Reversing and rescaling the generators changes nothing.
    Matrix mixed(0, ambient);
    for (std::size_t r = gens.rows(); r-- > 0;) {
      std::vector<Rat> row = gens.row(r);
      for (Rat& x : row) x *= Rat(7, 2);
      mixed.appendRow(row);
    }
    CHECK(Subspace::fromGenerators(mixed, ambient) == s);
    // Double-containment oracle agrees with basis equality.
    const Subspace t =
        Subspace::fromGenerators(randomMatrix(rng, randBelow(rng, 4), ambient),
                                 ambient);
    bool mutual = true;
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
      mutual = mutual && t.contains(s.basis().row(r));
    for (std::size_t r = 0; r < t.basis().rows(); ++r)
      mutual = mutual && s.contains(t.basis().row(r));
    CHECK(subspaceEqual(s, t) == mutual);
  }
  CHECK(Subspace::zero(3).dimension() == 0);
  CHECK(Subspace::full(3).dimension() == 3);
  CHECK_THROWS_AS(subspaceEqual(Subspace::zero(2), Subspace::zero(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Subspace::fromCanonicalRows(
          Matrix::fromRows({{Rat(2), Rat(0)}}, 2), 2),
      std::invalid_argument);
}

TEST_CASE("eliminateAndProject keeps exactly the liftable points") {
  Rng rng(306);
  for (int i = 0; i < 100; ++i) {
    const std::size_t cols = 1 + randBelow(rng, 6);
    const Matrix constraints = randomMatrix(rng, randBelow(rng, 4), cols);
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < cols; ++c)
      if (randBelow(rng, 2) == 0) keep.push_back(c);
    const Subspace s = eliminateAndProject(constraints, keep);
    // Each basis row of the projection lifts to a full solution.
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
      CHECK(liftable(constraints, keep, s.basis().row(r)));
    // Random solutions project into it.
    const Matrix k = kernelBasis(constraints);
    if (k.rows() > 0) {
      std::vector<Rat> member(cols);
      for (std::size_t r = 0; r < k.rows(); ++r) {
        const Rat coeff(static_cast<long>(randBelow(rng, 9)) - 4, 3);
        for (std::size_t c = 0; c < cols; ++c)
          member[c] += coeff * k.at(r, c);
      }
      std::vector<Rat> projected;
      for (std::size_t c : keep) projected.push_back(member[c]);
      CHECK(s.contains(projected));
    }
  }
}

TEST_CASE("linSubMap agrees with the annihilator formulation") {
  Rng rng(307);
  int bijections = 0;
  for (int i = 0; i < 150; ++i) {
    const FinSet dom = randomFinSet(rng, 4);
    const FinSet cod =
        randBelow(rng, 3) == 0 ? dom : randomFinSet(rng, 4);
    if (cod.empty() && !dom.empty()) continue;
    const FinFunction f = randBelow(rng, 2) == 0 && dom == cod
                              ? randomPermutation(rng, dom)
                              : randomFinFunction(rng, dom, cod);
    if (f.isBijection()) ++bijections;
    const Subspace l = randomSubspace(rng, dom, 3);
    CHECK(subspaceEqual(linSubMap(f, l), pushforwardByAnnihilator(f, l)));
  }
  // The permutation fast path must have been on trial too.
  CHECK(bijections > 10);
}

TEST_CASE("linSubMap merge fixture") {
  // L = span{(1,1,2,-2)} on two nodes; merging them forces the potential
  // pair (t,t) and cancels the currents, leaving span{(1,0)}.
  const Subspace l = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(1), Rat(1), Rat(2), Rat(-2)}}, 4), 4);
  const FinFunction merge(FinSet(2), FinSet(1), {0, 0});
  const Subspace want = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(1), Rat(0)}}, 2), 2);
  CHECK(subspaceEqual(linSubMap(merge, l), want));
}

TEST_CASE("subspaceTensor interleaves potentials before currents") {
  const Subspace a = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(1), Rat(2)}}, 2), 2);
  const Subspace b = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(3), Rat(4)}}, 2), 2);
  const Subspace want = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(1), Rat(0), Rat(2), Rat(0)},
                        {Rat(0), Rat(3), Rat(0), Rat(4)}}, 4), 4);
  CHECK(subspaceEqual(subspaceTensor(a, b), want));
  CHECK(subspaceTensor(subspaceUnit(), a) == a);
  CHECK(subspaceTensor(a, subspaceUnit()) == a);
}

}  // TEST_SUITE("linear-algebra")
