#ifndef SSE_ORACLE_HPP
#define SSE_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "sse/graph.hpp"
#include "sse/matroid.hpp"
#include "sse/repfam.hpp"
#include "sse/sse_dp.hpp"

namespace sse::oracle {

/// Definitional p-edge-connectivity: try all (p-1)-edge deletions when that
/// enumeration is small, fall back to max-flow otherwise. Same singleton
/// rule as the solver-side test.
bool is_p_edge_connected_brute(const Graph& g, const std::vector<int>& s, int p,
                               bool strict_singleton = false);

/// Exhaustive scan of all S containing x with |S| <= k. Capped at 14 vertices.
SseResult brute_solve_sse(const Graph& g, const std::vector<int>& x, int k, int p,
                          bool strict_singleton = false);

/// Exhaustive scan for the deletion problems (bdds, pw1ds, tdds, pvc,
/// scattered), using direct definitional residual checks. Capped at 12
/// vertices. extras carries eta; scattered reads the families arguments.
SseResult brute_deletion(const std::string& problem, const Graph& g, int k, int p,
                         const std::map<std::string, int>& extras, bool strict_singleton = false,
                         const std::vector<Graph>* f1 = nullptr, const std::vector<Graph>* f2 = nullptr);

/// Definitional q-representativeness check by enumerating every Y of size
/// at most q over the ground set.
bool brute_repfam_check(const LinearMatroid& m, const SetFamily& fam, const SetFamily& reduced, int q);

/// Pathwidth <= 1 by exhaustive vertex-separation search (n <= 8).
bool pathwidth_le1_by_search(const Graph& g);

/// Subgraph containment by plain backtracking (oracle-local copy).
bool contains_subgraph(const Graph& g, const Graph& pattern, bool induced);

/// Arc set forms an out-branching rooted at root: root in-degree 0, all
/// others in-degree 1, everything reachable from the root.
bool is_out_branching(const EquivalentDigraph& d, const std::vector<int>& arc_ids);

/// Does the equivalent digraph pack p pairwise arc-disjoint out-branchings
/// rooted at root? Backtracking search, desk scale only.
bool packs_out_branchings(const Graph& g, int root, int p);

}  // namespace sse::oracle

#endif
