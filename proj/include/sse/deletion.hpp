#ifndef SSE_DELETION_HPP
#define SSE_DELETION_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sse/graph.hpp"
#include "sse/sse_dp.hpp"

namespace sse {

/// Vertex set of a forbidden structure found in a graph.
struct Obstruction {
  std::vector<int> vertices;  // sorted
  std::string kind;           // star, T2, C3, C4, path, td-obstruction, custom
};

class ObstructionError : public std::runtime_error {
 public:
  explicit ObstructionError(Obstruction obs)
      : std::runtime_error("forbidden structure present: " + obs.kind), obstruction(std::move(obs)) {}
  Obstruction obstruction;
};

/// Finds an obstruction among non-deleted vertices, or nullopt if clean.
using ObstructionFinder =
    std::function<std::optional<Obstruction>(const Graph&, const std::vector<bool>& deleted)>;

/// All inclusion-minimal vertex sets of size <= k whose deletion leaves the
/// finder clean, via bounded branching on obstruction vertices. Sorted by
/// (size, lexicographic).
std::vector<std::vector<int>> enumerate_minimal_hitting_sets(const Graph& g, int k,
                                                             const ObstructionFinder& finder);

/// Subgraph / induced-subgraph embedding test by backtracking (small patterns).
bool has_subgraph_embedding(const Graph& g, const std::vector<bool>& deleted, const Graph& pattern,
                            bool induced);
/// Distinct vertex sets carrying an induced embedding of the pattern.
std::vector<std::vector<int>> induced_embedding_sets(const Graph& g, const std::vector<bool>& deleted,
                                                     const Graph& pattern);

// --- pathwidth-one machinery ---

/// Some T_2, C_3 or C_4 subgraph, or nullopt.
std::optional<Obstruction> find_obstruction_t2c3c4(const Graph& g);
std::optional<Obstruction> find_obstruction_t2c3c4(const Graph& g, const std::vector<bool>& deleted);

/// No cycle and no T_2 subgraph.
bool is_pathwidth_le1(const Graph& g);

struct Pw1Component {
  std::vector<int> core;      // induced path or cycle, in emission order
  bool is_cycle = false;
  std::vector<int> pendants;  // hairs, grouped along the core
};

/// Per-component core/pendant split plus the 2-degenerate ordering that
/// lists each core before its pendants (components in ascending order).
/// Throws ObstructionError if the graph has a T_2, C_3 or C_4.
struct Pw1Structure {
  std::vector<Pw1Component> components;
  Ordering ordering;
};

Pw1Structure pw1_structure(const Graph& g);

// --- treedepth and path cover machinery ---

/// Exact treedepth by the recursive definition; capped at 16 vertices.
int treedepth(const Graph& g);

/// Connected set inducing treedepth > eta (size <= 2^(2^eta)), or nullopt.
/// Supported for eta in {1, 2}.
std::optional<Obstruction> find_td_obstruction(const Graph& g, int eta);

/// A path with eta vertices as a subgraph, or nullopt. Needs eta >= 2.
std::optional<Obstruction> find_path_subgraph(const Graph& g, int eta);
std::optional<Obstruction> find_path_subgraph(const Graph& g, const std::vector<bool>& deleted, int eta);

// --- scattered deletion machinery ---

struct ForbiddenPair {
  std::vector<int> first_set;   // induced embedding of a member of the first family
  std::vector<int> second_set;  // induced embedding of a member of the second family
  std::vector<int> path;        // shortest connecting path incl. endpoints; empty if none
  int distance = -1;            // edges; -1 when the embeddings share no component
};

/// Closest pair of induced embeddings across the two families, or nullopt
/// when either family has no embedding at all. Family members are capped at
/// 7 vertices.
std::optional<ForbiddenPair> closest_forbidden_pair(const Graph& g, const std::vector<Graph>& f1,
                                                    const std::vector<Graph>& f2);

/// Every component avoids the first family or avoids the second (induced).
bool scattered_clean(const Graph& g, const std::vector<Graph>& f1, const std::vector<Graph>& f2);

// --- residual-class predicates shared with the verifier ---

bool max_degree_at_most(const Graph& g, int eta);
/// Characterization-based treedepth <= eta test for eta in {1, 2}.
bool treedepth_le_small(const Graph& g, int eta);
bool path_free(const Graph& g, int eta);

// --- solvers ---

struct DeletionOptions {
  std::uint64_t seed = 0;
  bool strict_singleton = false;
  int jobs = 1;
  int cap_arc_degree = 14;
  std::uint64_t field_prime = 0;
};

/// Delete at most k vertices so the rest has max degree <= eta and the
/// deleted set induces a p-edge-connected subgraph.
SseResult solve_bdds(const Graph& g, int k, int p, int eta, const DeletionOptions& opt = {});

/// Same with pathwidth <= 1 as the residual condition.
SseResult solve_pw1ds(const Graph& g, int k, int p, const DeletionOptions& opt = {});

/// Same with treedepth <= eta (eta in {1, 2}).
SseResult solve_tdds(const Graph& g, int k, int p, int eta, const DeletionOptions& opt = {});

/// Same with no P_eta subgraph left (eta >= 2).
SseResult solve_pvc(const Graph& g, int k, int p, int eta, const DeletionOptions& opt = {});

/// Same with every remaining component inside one of the two classes given
/// by finite induced-forbidden families. P_lambda must belong to one of the
/// families; roles are swapped internally if it sits in f2.
SseResult solve_scattered(const Graph& g, int k, int p, const std::vector<Graph>& f1,
                          const std::vector<Graph>& f2, int lambda, const DeletionOptions& opt = {});

/// Connectivity rule for deletion solutions: the empty set passes, a
/// singleton passes outside strict mode, anything else needs p-edge-connectivity.
bool deletion_connectivity_ok(const Graph& g, const std::vector<int>& s, int p, bool strict_singleton);

}  // namespace sse

#endif
