#ifndef SSE_MATRIX_HPP
#define SSE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sse/field.hpp"

namespace sse {

/// Dense matrix over a prime field, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<std::uint64_t> column(int c) const;

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<std::uint64_t> a_;
};

/// Row rank by Gaussian elimination.
int matrix_rank(const Matrix& m, const PrimeField& f);

/// Rank of the listed columns.
int column_rank(const Matrix& m, const PrimeField& f, std::span<const int> cols);

/// Matrix whose rows form a basis of the row space (rank rows). Column
/// independence relations are preserved.
Matrix row_basis(const Matrix& m, const PrimeField& f);

/// Determinant of a square matrix of column vectors (each of length n).
std::uint64_t det_columns(const std::vector<std::vector<std::uint64_t>>& cols, const PrimeField& f);

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f);

/// Incremental column-independence tester with stack discipline. push()
/// reduces the new column against the current echelon basis; pop() undoes
/// the most recent successful pushes.
class IncrementalIndep {
 public:
  IncrementalIndep(const PrimeField& f, int dim) : f_(&f), dim_(dim) {}

  /// True and records the column if it is independent of the basis so far.
  bool push(std::span<const std::uint64_t> col);
  void pop(int count);
  int size() const { return static_cast<int>(pivots_.size()); }
  void clear() {
    basis_.clear();
    pivots_.clear();
  }

 private:
  const PrimeField* f_;
  int dim_;
  std::vector<std::vector<std::uint64_t>> basis_;  // normalized echelon rows
  std::vector<int> pivots_;
};

}  // namespace sse

#endif
