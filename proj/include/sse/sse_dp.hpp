#ifndef SSE_SSE_DP_HPP
#define SSE_SSE_DP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sse/graph.hpp"
#include "sse/matroid.hpp"

namespace sse {

struct SseResult {
  bool yes = false;
  std::vector<int> solution;   // sorted vertex ids, present iff yes
  int certificate_size = 0;    // independent-set size when found via the table
};

/// Back-neighbor sets along an ordering of V(g) - x: entry j (1-based,
/// entry 0 unused) lists N(v_j) among earlier positions, excluding x.
std::vector<std::vector<int>> back_neighbor_sets(const Graph& g, const std::vector<int>& x,
                                                 const Ordering& ordering);

/// Hook for problem-specific transition constraints carried as a small
/// per-slot state. The default accepts everything with a single state.
class DpGuard {
 public:
  virtual ~DpGuard() = default;
  virtual int base_state() const { return 0; }
  /// State for a set extended from position src_pos (0 = none yet) to
  /// tgt_pos, where entering_mask also enters V(I) alongside the target
  /// vertex. nullopt rejects the transition.
  virtual std::optional<int> transition(int src_state, int src_pos, int tgt_pos,
                                        std::uint64_t entering_mask) const {
    (void)src_pos;
    (void)tgt_pos;
    (void)entering_mask;
    return src_state;
  }
  virtual bool accept_final(int state, int last_pos) const {
    (void)state;
    (void)last_pos;
    return true;
  }
};

/// Table index: families are keyed by how many non-terminal vertices they
/// span, the position of the newest one, their element count, their
/// intersection with that position's back-neighborhood, and the position
/// (with intersection) they will extend at next.
struct DpSlot {
  int num_chosen = 0;
  int last_pos = 0;
  int num_elements = 0;
  std::uint64_t back_mask = 0;
  std::uint64_t next_back_mask = 0;
  int next_pos = 0;
  int state = 0;
  auto operator<=>(const DpSlot&) const = default;
};

struct DpMember {
  std::vector<int> elems;      // sorted column ids
  std::uint64_t chosen_mask;   // spanned vertices outside x
};

struct SlotOrder {
  bool operator()(const DpSlot& a, const DpSlot& b) const {
    auto key = [](const DpSlot& s) {
      return std::tuple(s.next_pos, s.last_pos, s.num_chosen, s.num_elements, s.back_mask,
                        s.next_back_mask, s.state);
    };
    return key(a) < key(b);
  }
};

using DpTable = std::map<DpSlot, std::vector<DpMember>, SlotOrder>;

struct DpRunConfig {
  int k = 2;
  int p = 1;
  int cap_arc_degree = 14;
  bool exhaustive = false;  // keep filling the table after the first hit
};

/// Representative-family dynamic program over a degeneracy-style ordering.
/// Vertices are added in increasing position; each step attaches arc triples
/// between the new vertex and x or already-spanned back-neighbors, and may
/// pull in back-neighbors that have no earlier attachment of their own.
class SseDpEngine {
 public:
  SseDpEngine(const Graph& g, std::vector<int> x, Ordering ordering, const SseMatroid& matroid,
              const DpGuard& guard, DpRunConfig cfg);

  /// First solution found, as vertices of g.
  std::optional<std::vector<int>> run();

  const DpTable& table() const { return table_; }
  const std::vector<std::vector<DpMember>>& base_families() const { return base_; }
  std::vector<int> vertices_of(const DpMember& member) const;

 private:
  struct ArcItem {
    int arc;
    int other;
  };

  void build_base();
  void process_target(int tgt_pos);
  std::vector<DpMember> reduced(std::vector<DpMember>&& fam, int num_elements) const;
  bool try_accept_final(const DpMember& member, int state, int last_pos);
  int max_branch_label(const DpMember& member) const;

  const Graph& g_;
  std::vector<int> x_;
  std::uint64_t x_mask_ = 0;
  Ordering ordering_;
  const SseMatroid& matroid_;
  const DpGuard& guard_;
  DpRunConfig cfg_;

  int n_positions_ = 0;
  std::vector<int> vertex_at_;              // position (1-based) -> vertex
  std::vector<int> pos_of_;                 // vertex -> position, 0 if terminal
  std::vector<std::uint64_t> back_mask_;    // position -> back-neighbor vertex mask
  std::vector<std::vector<std::uint64_t>> columns_;  // column id -> column vector
  std::map<std::pair<int, int>, int> arc_id_;

  int target_chosen_ = 0;
  int target_elems_ = 0;

  std::vector<std::vector<DpMember>> base_;  // index: elements/3
  DpTable table_;
  std::optional<std::vector<int>> found_;
};

struct SseOptions {
  std::optional<Ordering> ordering;  // over V(g) - x
  std::uint64_t seed = 0;
  bool strict_singleton = false;
  std::uint64_t field_prime = 0;  // 0 = pick smallest prime > max(n^2, 2m, 1e6)
  int cap_arc_degree = 14;
  int cap_vertices = 64;
};

/// Is there S containing x with |S| <= k and g[S] p-edge-connected?
/// Sets of at least two vertices are searched size by size through the
/// table; in the default (non-strict) mode a one-vertex set is accepted as
/// a fallback when x has at most one vertex.
SseResult solve_extension(const Graph& g, const std::vector<int>& x, int k, int p,
                          const SseOptions& opt = {});

/// Empty string if sol is a valid answer for the extension instance, else
/// the violated condition: "terminal not covered", "budget", "connectivity".
std::string check_sse_solution(const Graph& g, const std::vector<int>& x, int k, int p,
                               const std::vector<int>& sol, bool strict_singleton = false);

/// Vertices surviving repeated removal of degree-below-p vertices.
std::vector<int> p_core(const Graph& g, int p);

/// Field used when none is requested explicitly.
PrimeField default_field(const Graph& g);

}  // namespace sse

#endif
