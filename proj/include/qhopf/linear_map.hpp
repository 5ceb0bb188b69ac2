#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

/// Sparse column: (row, value) pairs sorted by row, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Sparse exact matrix stored by columns. Column j is the image of basis
/// vector j, so composition reads right to left like function application.
class Matrix {
 public:
  Matrix() : rows_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  static Matrix identity(int n);
  /// Permutation matrix sending basis j to basis image[j].
  static Matrix permutation(const std::vector<int>& image);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }

  const SparseVec& col(int j) const { return cols_.at(j); }
  /// Replaces column j; the input need not be sorted or free of zeros.
  void set_col(int j, SparseVec v);
  Scalar at(int i, int j) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Kronecker product; row index of A is the most significant.
  friend Matrix kron(const Matrix& a, const Matrix& b);

  /// Lexicographically first (column, row) where the matrices differ.
  friend std::optional<std::pair<int, int>> first_difference(const Matrix& a, const Matrix& b);

  /// Gauss-Jordan inverse. Pivots must be nonzero constants (no beta).
  /// Throws SingularError if none can be found.
  Matrix inverse() const;

  bool is_identity() const;
  std::size_t nonzeros() const;

 private:
  int rows_;
  std::vector<SparseVec> cols_;
};

/// Dense accumulator used to assemble one sparse column.
class ColumnBuilder {
 public:
  explicit ColumnBuilder(int rows) : vals_(rows), used_(rows, false) {}
  void add(int row, const Scalar& v);
  /// Returns the accumulated column and resets the builder.
  SparseVec take();

 private:
  std::vector<Scalar> vals_;
  std::vector<bool> used_;
  std::vector<int> touched_;
};

}  // namespace qhopf
