#include "sse/matrix.hpp"

#include <stdexcept>

namespace sse {

std::vector<std::uint64_t> Matrix::column(int c) const {
  std::vector<std::uint64_t> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

namespace {

// In-place elimination on a list of row vectors; returns rank.
int eliminate(std::vector<std::vector<std::uint64_t>>& rows, const PrimeField& f) {
  if (rows.empty()) return 0;
  int n = static_cast<int>(rows.size());
  int m = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint64_t ipv = f.inv(rows[rank][col]);
    for (int c = col; c < m; ++c) rows[rank][c] = f.mul(rows[rank][c], ipv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint64_t factor = rows[r][col];
      for (int c = col; c < m; ++c) {
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const Matrix& m, const PrimeField& f) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return eliminate(rows, f);
}

int column_rank(const Matrix& m, const PrimeField& f, std::span<const int> cols) {
  // Work on the transposed selection: one row per chosen column.
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(cols.size());
  for (int c : cols) {
    if (c < 0 || c >= m.cols()) throw std::invalid_argument("column index out of range");
    rows.push_back(m.column(c));
  }
  return eliminate(rows, f);
}

Matrix row_basis(const Matrix& m, const PrimeField& f) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  int rank = eliminate(rows, f);
  Matrix out(rank, m.cols());
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = rows[r][c];
  }
  return out;
}

std::uint64_t det_columns(const std::vector<std::vector<std::uint64_t>>& cols, const PrimeField& f) {
  int n = static_cast<int>(cols.size());
  if (n == 0) return 1;
  if (static_cast<int>(cols[0].size()) != n) throw std::invalid_argument("det needs square input");
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) a[r][c] = cols[c][r];
  }
  std::uint64_t det = 1;
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      negate = !negate;
    }
    det = f.mul(det, a[col][col]);
    std::uint64_t ipv = f.inv(a[col][col]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      std::uint64_t factor = f.mul(a[r][col], ipv);
      for (int c = col; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
    }
  }
  return negate ? f.neg(det) : det;
}

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      std::uint64_t v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
      }
    }
  }
  return out;
}

bool IncrementalIndep::push(std::span<const std::uint64_t> col) {
  std::vector<std::uint64_t> v(col.begin(), col.end());
  for (size_t i = 0; i < basis_.size(); ++i) {
    std::uint64_t c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& b = basis_[i];
    for (int j = 0; j < dim_; ++j) v[j] = f_->sub(v[j], f_->mul(c, b[j]));
  }
  int piv = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  std::uint64_t ipv = f_->inv(v[piv]);
  for (int j = 0; j < dim_; ++j) v[j] = f_->mul(v[j], ipv);
  basis_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

void IncrementalIndep::pop(int count) {
  for (int i = 0; i < count; ++i) {
    basis_.pop_back();
    pivots_.pop_back();
  }
}

}  // namespace sse
