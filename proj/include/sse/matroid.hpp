#ifndef SSE_MATROID_HPP
#define SSE_MATROID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sse/field.hpp"
#include "sse/graph.hpp"
#include "sse/matrix.hpp"

namespace sse {

/// One copy of an arc inside a layer of a layered ground set. Standalone
/// matroids use layer 0; the direct-sum construction tags layers 1..2p+1.
struct GroundElement {
  int layer = 0;
  int arc = 0;
  auto operator<=>(const GroundElement&) const = default;
};

/// Matrix representation of a matroid: element -> column, independence of a
/// set of elements = linear independence of the mapped columns.
class LinearMatroid {
 public:
  LinearMatroid(PrimeField field, Matrix matrix, std::vector<GroundElement> elements);

  const PrimeField& field() const { return field_; }
  const Matrix& matrix() const { return matrix_; }
  int rank() const { return rank_; }
  int ground_size() const { return static_cast<int>(elements_.size()); }

  const GroundElement& element(int column) const { return elements_[column]; }
  /// Column index of an element; throws if unknown.
  int column_of(const GroundElement& e) const;

  bool is_independent_columns(std::span<const int> columns) const;
  bool is_independent(std::span<const GroundElement> elems) const;

 private:
  PrimeField field_;
  Matrix matrix_;
  std::vector<GroundElement> elements_;
  std::map<GroundElement, int> column_of_;
  int rank_;
};

/// Graphic matroid of g on the arc set: every arc is represented by its
/// underlying edge (signed incidence column), so antiparallel arcs are
/// parallel elements.
LinearMatroid graphic_representation(const Graph& g, const std::vector<std::pair<int, int>>& arcs,
                                     const PrimeField& field, int layer = 0);

/// Out-partition matroid of the equivalent digraph: independent iff the root
/// has in-degree 0 and every other vertex in-degree at most 1.
LinearMatroid out_partition_representation(const EquivalentDigraph& d, const PrimeField& field, int layer = 0);

/// Uniform matroid U(ground_size, r) as a Vandermonde matrix. Needs
/// field modulus > ground_size.
LinearMatroid uniform_representation(int ground_size, int r, const PrimeField& field, int layer = 0);

/// Block-diagonal sum. Parts must share the field and have disjoint grounds.
LinearMatroid direct_sum(const std::vector<LinearMatroid>& parts);

/// Randomized truncation to rank r': left-multiply by a seeded random
/// r' x rows matrix. Independent sets of size <= r' are preserved with
/// probability >= 1 - rank*r'/q; deterministic for a fixed seed.
LinearMatroid truncate(const LinearMatroid& m, int r, std::uint64_t seed);

/// The three copies of an arc used together by the extension solver:
/// layers 2i-1 (graphic), 2i (out-partition) and 2p+1 (uniform).
struct ArcTriple {
  int arc = 0;
  int branching = 0;               // i in 1..p
  std::array<int, 3> columns{};    // column ids in the direct-sum matroid
};

/// Direct-sum matroid of the extension solver, truncated to 3p(k-1).
struct SseMatroid {
  LinearMatroid matroid;
  EquivalentDigraph digraph;
  int p = 1;
  int k = 2;
  /// triple(arc, i) for i in 1..p.
  const ArcTriple& triple(int arc, int branching) const { return triples_[arc * p + (branching - 1)]; }
  std::vector<ArcTriple> triples_;
};

/// Rank of the untruncated direct sum (graphic + out-partition + uniform
/// blocks); the truncation to 3p(k-1) is only feasible when this reaches it.
int sse_matroid_rank_bound(const Graph& g, int root, int k, int p);

SseMatroid build_sse_matroid(const Graph& g, int root, int k, int p, const PrimeField& field,
                             std::uint64_t seed);

}  // namespace sse

#endif
