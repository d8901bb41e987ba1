#ifndef SSE_CONNECTIVITY_HPP
#define SSE_CONNECTIVITY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "sse/graph.hpp"

namespace sse {

/// Maximum number of pairwise edge-disjoint u-v paths (= min u-v edge cut),
/// by BFS augmentation on unit capacities. Requires u != v.
int min_cut_value(const Graph& g, int u, int v);

/// Edge connectivity of g (0 for disconnected or single-vertex graphs).
int edge_connectivity(const Graph& g);

/// Is g[s] p-edge-connected? Size-0 sets are never p-edge-connected.
/// Size-1 sets count as p-edge-connected unless strict_singleton is set
/// (the strict mode requires at least two vertices).
bool is_p_edge_connected(const Graph& g, const std::vector<int>& s, int p, bool strict_singleton = false);

/// Partition of V into maximal p-segments: same segment iff the min edge
/// cut between the two vertices in g is at least p.
struct SegmentPartition {
  std::vector<std::vector<int>> segments;  // each sorted; sorted by first member
  int p = 1;
};

SegmentPartition p_segments(const Graph& g, int p);

/// Some S >= x with g[S] p-edge-connected (no size bound), or nullopt.
/// Recursive descent through p-segments. Requires g connected.
std::optional<std::vector<int>> feasible_superset(const Graph& g, const std::vector<int>& x, int p,
                                                  bool strict_singleton = false);

/// Some S with g[S] p-edge-connected and recognizer(g - S) true, or nullopt.
/// The recognizer must accept a hereditary graph class.
std::optional<std::vector<int>> feasible_deletion(const Graph& g, int p,
                                                  const std::function<bool(const Graph&)>& recognizer,
                                                  bool strict_singleton = false);

}  // namespace sse

#endif
