#include "dcospan/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dcospan {

Matrix Matrix::identityMatrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(std::vector<std::vector<Rat>> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("fromRows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return m;
}

std::vector<Rat> Matrix::row(std::size_t r) const {
  std::vector<Rat> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

void Matrix::appendRow(const std::vector<Rat>& row) {
  if (row.size() != cols_)
    throw std::invalid_argument("appendRow: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.isZero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hconcat: row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

namespace {

// In-place Gauss-Jordan elimination. Returns the pivot column of each pivot
// row; rows beyond the returned count are zero.
std::vector<std::size_t> eliminate(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).isZero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    const Rat inv = m.at(row, col).reciprocal();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).isZero()) continue;
      const Rat factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix rowReduce(Matrix m) {
  const std::vector<std::size_t> pivots = eliminate(m);
  Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

Matrix kernelBasis(const Matrix& m) {
  Matrix r = rowReduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  std::vector<std::size_t> pivotRowOf(m.cols(), 0);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (r.at(i, c).isZero()) ++c;
    isPivot[c] = true;
    pivotRowOf[c] = i;
  }
  std::size_t freeCount = m.cols() - r.rows();
  Matrix out(freeCount, m.cols());
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (isPivot[j]) continue;
    out.at(k, j) = 1;
    for (std::size_t c = 0; c < j; ++c)
      if (isPivot[c]) out.at(k, c) = -r.at(pivotRowOf[c], j);
    ++k;
  }
  return out;
}

std::optional<Matrix> solveExact(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solveExact: matrix not square");
  if (a.rows() != b.rows())
    throw std::invalid_argument("solveExact: right-hand side height differs");
  if (a.rows() == 0) return Matrix(0, b.cols());
  Matrix aug = hconcat(a, b);
  const std::vector<std::size_t> pivots = eliminate(aug);
  if (pivots.size() != a.rows() || pivots.back() >= a.cols())
    return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(i, j) = aug.at(i, a.cols() + j);
  return x;
}

}  // namespace dcospan
