#include "sse/matroid.hpp"

#include <random>
#include <stdexcept>

namespace sse {

LinearMatroid::LinearMatroid(PrimeField field, Matrix matrix, std::vector<GroundElement> elements)
    : field_(field), matrix_(std::move(matrix)), elements_(std::move(elements)) {
  if (static_cast<int>(elements_.size()) != matrix_.cols())
    throw std::invalid_argument("one ground element per column required");
  for (int c = 0; c < matrix_.cols(); ++c) {
    if (!column_of_.emplace(elements_[c], c).second)
      throw std::invalid_argument("duplicate ground element");
  }
  rank_ = matrix_rank(matrix_, field_);
}

int LinearMatroid::column_of(const GroundElement& e) const {
  auto it = column_of_.find(e);
  if (it == column_of_.end()) throw std::invalid_argument("unknown ground element");
  return it->second;
}

bool LinearMatroid::is_independent_columns(std::span<const int> columns) const {
  for (int c : columns) {
    if (c < 0 || c >= matrix_.cols()) throw std::invalid_argument("unknown ground element");
  }
  return column_rank(matrix_, field_, columns) == static_cast<int>(columns.size());
}

bool LinearMatroid::is_independent(std::span<const GroundElement> elems) const {
  std::vector<int> cols;
  cols.reserve(elems.size());
  for (const auto& e : elems) cols.push_back(column_of(e));
  return is_independent_columns(cols);
}

LinearMatroid graphic_representation(const Graph& g, const std::vector<std::pair<int, int>>& arcs,
                                     const PrimeField& field, int layer) {
  Matrix m(g.num_vertices(), static_cast<int>(arcs.size()));
  std::vector<GroundElement> elems;
  elems.reserve(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    if (!g.has_edge(u, v)) throw std::invalid_argument("arc without an underlying edge");
    int lo = std::min(u, v), hi = std::max(u, v);
    m.at(lo, static_cast<int>(i)) = 1;
    m.at(hi, static_cast<int>(i)) = field.neg(1);
    elems.push_back({layer, static_cast<int>(i)});
  }
  return LinearMatroid(field, std::move(m), std::move(elems));
}

LinearMatroid out_partition_representation(const EquivalentDigraph& d, const PrimeField& field, int layer) {
  Matrix m(d.base.num_vertices(), d.num_arcs());
  std::vector<GroundElement> elems;
  elems.reserve(d.num_arcs());
  for (int i = 0; i < d.num_arcs(); ++i) {
    int head = d.arcs[i].second;
    if (head != d.root) m.at(head, i) = 1;  // arcs into the root stay zero columns
    elems.push_back({layer, i});
  }
  return LinearMatroid(field, std::move(m), std::move(elems));
}

LinearMatroid uniform_representation(int ground_size, int r, const PrimeField& field, int layer) {
  if (ground_size < 0 || r < 0 || r > ground_size) throw std::invalid_argument("bad uniform matroid shape");
  if (field.modulus() <= static_cast<std::uint64_t>(ground_size))
    throw std::invalid_argument("field too small for a Vandermonde representation");
  Matrix m(r, ground_size);
  for (int c = 0; c < ground_size; ++c) {
    std::uint64_t x = static_cast<std::uint64_t>(c + 1);
    std::uint64_t v = 1;
    for (int row = 0; row < r; ++row) {
      m.at(row, c) = v;
      v = field.mul(v, x);
    }
  }
  std::vector<GroundElement> elems;
  elems.reserve(ground_size);
  for (int c = 0; c < ground_size; ++c) elems.push_back({layer, c});
  return LinearMatroid(field, std::move(m), std::move(elems));
}

LinearMatroid direct_sum(const std::vector<LinearMatroid>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  const PrimeField& f = parts[0].field();
  int rows = 0, cols = 0;
  for (const auto& p : parts) {
    if (!(p.field() == f)) throw std::invalid_argument("field mismatch in direct sum");
    rows += p.matrix().rows();
    cols += p.matrix().cols();
  }
  Matrix m(rows, cols);
  std::vector<GroundElement> elems;
  elems.reserve(cols);
  int r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    const Matrix& pm = p.matrix();
    for (int r = 0; r < pm.rows(); ++r) {
      for (int c = 0; c < pm.cols(); ++c) m.at(r0 + r, c0 + c) = pm.at(r, c);
    }
    for (int c = 0; c < pm.cols(); ++c) elems.push_back(p.element(c));
    r0 += pm.rows();
    c0 += pm.cols();
  }
  return LinearMatroid(f, std::move(m), std::move(elems));
}

LinearMatroid truncate(const LinearMatroid& m, int r, std::uint64_t seed) {
  if (r < 0 || r > m.rank()) throw std::invalid_argument("truncation rank exceeds matroid rank");
  std::mt19937_64 rng(seed);
  const PrimeField& f = m.field();
  Matrix t(r, m.matrix().rows());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m.matrix().rows(); ++j) t.at(i, j) = rng() % f.modulus();
  }
  Matrix prod = multiply(t, m.matrix(), f);
  std::vector<GroundElement> elems;
  elems.reserve(m.ground_size());
  for (int c = 0; c < m.ground_size(); ++c) elems.push_back(m.element(c));
  return LinearMatroid(f, std::move(prod), std::move(elems));
}

int sse_matroid_rank_bound(const Graph& g, int root, int k, int p) {
  int n = g.num_vertices();
  int comps = static_cast<int>(g.components().size());
  int graphic_rank = n - comps;
  int heads = 0;  // non-root vertices that head at least one arc
  for (int v = 0; v < n; ++v) {
    if (v != root && g.degree(v) > 0) ++heads;
  }
  return p * graphic_rank + p * heads + p * (k - 1);
}

SseMatroid build_sse_matroid(const Graph& g, int root, int k, int p, const PrimeField& field,
                             std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("build_sse_matroid needs k >= 2");
  if (p < 1) throw std::invalid_argument("build_sse_matroid needs p >= 1");
  EquivalentDigraph d = equivalent_digraph(g, root);
  int arcs = d.num_arcs();
  if (field.modulus() <= static_cast<std::uint64_t>(std::max(arcs, 1)))
    throw std::invalid_argument("field too small for the uniform block");

  std::vector<LinearMatroid> parts;
  parts.reserve(2 * p + 1);
  for (int i = 1; i <= p; ++i) {
    parts.push_back(graphic_representation(g, d.arcs, field, 2 * i - 1));
    parts.push_back(out_partition_representation(d, field, 2 * i));
  }
  parts.push_back(uniform_representation(arcs, p * (k - 1), field, 2 * p + 1));
  LinearMatroid full = direct_sum(parts);

  int target = 3 * p * (k - 1);
  if (target > full.rank()) throw std::invalid_argument("direct sum rank below truncation target");

  // Retry on the astronomically unlikely rank-deficient draw.
  LinearMatroid hat = truncate(full, target, seed);
  for (int attempt = 1; hat.rank() < target && attempt <= 4; ++attempt) {
    hat = truncate(full, target, seed + attempt);
  }
  if (hat.rank() < target) throw std::runtime_error("random truncation failed repeatedly");

  SseMatroid out{std::move(hat), std::move(d), p, k, {}};
  out.triples_.resize(static_cast<size_t>(arcs) * p);
  for (int a = 0; a < arcs; ++a) {
    for (int i = 1; i <= p; ++i) {
      ArcTriple t;
      t.arc = a;
      t.branching = i;
      t.columns = {out.matroid.column_of({2 * i - 1, a}), out.matroid.column_of({2 * i, a}),
                   out.matroid.column_of({2 * p + 1, a})};
      out.triples_[static_cast<size_t>(a) * p + (i - 1)] = t;
    }
  }
  return out;
}

}  // namespace sse
