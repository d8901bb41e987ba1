#include "doctest.h"

#include <random>
#include <stdexcept>

#include "sse/field.hpp"
#include "sse/matrix.hpp"

using namespace sse;

TEST_CASE("prime field arithmetic") {
  PrimeField f(1000003);
  CHECK(f.add(1000000, 10) == 7);
  CHECK(f.sub(3, 10) == 1000003 - 7);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.pow(2, 20) == (1 << 20) % 1000003);
  CHECK(PrimeField::next_prime(1000000) == 1000003);
  CHECK(PrimeField::is_prime(2));
  CHECK(!PrimeField::is_prime(1));
  CHECK(!PrimeField::is_prime(1000001));
  CHECK_THROWS_AS(PrimeField(15), std::invalid_argument);
}

TEST_CASE("matrix rank and determinants") {
  PrimeField f(101);
  Matrix m(3, 4);
  // rows: [1 2 3 4; 2 4 6 8; 0 1 0 1] -> rank 2
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) m.at(r, c) = vals[r][c];
  }
  CHECK(matrix_rank(m, f) == 2);
  CHECK(column_rank(m, f, std::vector<int>{0, 1}) == 2);
  CHECK(column_rank(m, f, std::vector<int>{0, 2}) == 1);

  Matrix basis = row_basis(m, f);
  CHECK(basis.rows() == 2);
  CHECK(column_rank(basis, f, std::vector<int>{0, 1}) == 2);
  CHECK(column_rank(basis, f, std::vector<int>{0, 2}) == 1);

  std::vector<std::vector<std::uint64_t>> cols = {{1, 0}, {0, 1}};
  CHECK(det_columns(cols, f) == 1);
  cols = {{2, 1}, {4, 2}};
  CHECK(det_columns(cols, f) == 0);
  cols = {{0, 1}, {1, 0}};
  CHECK(det_columns(cols, f) == 100);  // -1 mod 101
}

TEST_CASE("zero-row matrices make every nonempty column set dependent") {
  PrimeField f(101);
  Matrix m(0, 3);
  CHECK(matrix_rank(m, f) == 0);
  CHECK(column_rank(m, f, std::vector<int>{0}) == 0);
}

TEST_CASE("incremental independence matches batch rank") {
  PrimeField f(997);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 4 + static_cast<int>(rng() % 3);
    int count = 8;
    std::vector<std::vector<std::uint64_t>> cols(count, std::vector<std::uint64_t>(dim));
    for (auto& col : cols) {
      for (auto& x : col) x = rng() % 5;  // small values force collisions
    }
    IncrementalIndep inc(f, dim);
    Matrix m(dim, count);
    for (int c = 0; c < count; ++c) {
      for (int r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
    }
    std::vector<int> taken;
    for (int c = 0; c < count; ++c) {
      std::vector<int> probe = taken;
      probe.push_back(c);
      bool expect = column_rank(m, f, probe) == static_cast<int>(probe.size());
      CHECK(inc.push(cols[c]) == expect);
      if (expect) taken.push_back(c);
    }
    // pop restores the previous state
    if (!taken.empty()) {
      inc.pop(1);
      std::vector<std::uint64_t> again = cols[taken.back()];
      CHECK(inc.push(again));
    }
  }
}
