#ifndef SSE_GRAPH_HPP
#define SSE_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace sse {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Rejects loops, out-of-range endpoints and duplicates.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  /// Edges as (min,max) pairs, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<int> component_of(int v) const;
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;

  /// Subgraph induced by `verts`; `map_out[i]` is the original id of new vertex i.
  Graph induced(const std::vector<int>& verts, std::vector<int>* map_out = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A permutation of a vertex subset together with the degeneracy it claims:
/// every vertex has at most `claimed_degeneracy` neighbors at earlier positions.
struct Ordering {
  std::vector<int> sequence;
  int claimed_degeneracy = 0;
};

/// Max back-degree of `seq` in g, ignoring vertices outside the sequence.
int max_back_degree(const Graph& g, const std::vector<int>& seq);

/// Degeneracy ordering of g minus `excluded` by repeated minimum-degree
/// removal (smallest id breaks ties). claimed_degeneracy is exact.
Ordering degeneracy_ordering(const Graph& g, const std::vector<int>& excluded = {});

struct TreeDecomposition {
  int n = 0;                                  // vertices of the decomposed graph
  std::vector<std::vector<int>> bags;         // bag id -> vertex list
  std::vector<std::pair<int, int>> tree_edges;  // edges between bag ids
  int width() const;
};

/// Checks the three decomposition axioms, then emits bags in pre-order from
/// bag 0, skipping repeats. Throws std::invalid_argument naming the violated
/// axiom if the decomposition is invalid.
Ordering ordering_from_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// The layout itself, with claimed_degeneracy = cutwidth of the layout.
Ordering ordering_from_cutwidth_layout(const Graph& g, const std::vector<int>& layout);

/// Width of a linear layout: max edges crossing any position.
int cutwidth_of_layout(const Graph& g, const std::vector<int>& layout);

/// Both orientations of every edge, with a distinguished root.
struct EquivalentDigraph {
  Graph base;
  std::vector<std::pair<int, int>> arcs;  // arc id -> (tail, head)
  int root = 0;

  int num_arcs() const { return static_cast<int>(arcs.size()); }
  /// Arc id of (tail, head); -1 if absent.
  int arc_id(int tail, int head) const;
};

EquivalentDigraph equivalent_digraph(const Graph& g, int root);

}  // namespace sse

#endif
