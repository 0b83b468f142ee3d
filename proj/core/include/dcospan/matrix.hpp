#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dcospan/rational.hpp"

namespace dcospan {

// Dense matrix of exact rationals. Row/column counts may be zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identityMatrix(std::size_t n);
  static Matrix fromRows(std::vector<std::vector<Rat>> rows,
                         std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rat> row(std::size_t r) const;
  void appendRow(const std::vector<Rat>& row);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix hconcat(const Matrix& a, const Matrix& b);

// Reduced row-echelon form with zero rows dropped: pivots are 1, strictly
// increasing, and alone in their column. The result is the canonical
// representative of the input's row space.
Matrix rowReduce(Matrix m);

// Rows span the kernel {v : m v = 0}; one row per free column of the RREF,
// emitted in increasing free-column order.
Matrix kernelBasis(const Matrix& m);

// Solves a x = b for square invertible a; nullopt when a is singular.
std::optional<Matrix> solveExact(const Matrix& a, const Matrix& b);

}  // namespace dcospan
