#include "sse/deletion.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "sse/connectivity.hpp"

namespace sse {

namespace {

std::vector<bool> no_deletions(const Graph& g) { return std::vector<bool>(g.num_vertices(), false); }

std::vector<int> alive_vertices(const Graph& g, const std::vector<bool>& deleted) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!deleted[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> alive_neighbors(const Graph& g, const std::vector<bool>& deleted, int v) {
  std::vector<int> out;
  for (int u : g.neighbors(v)) {
    if (!deleted[u]) out.push_back(u);
  }
  return out;
}

Graph minus(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> drop(g.num_vertices(), false);
  for (int v : removed) drop[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return g.induced(keep);
}

}  // namespace

// --- generic embedding search ---

namespace {

bool embed_rec(const Graph& g, const std::vector<bool>& deleted, const Graph& pat, bool induced,
               std::vector<int>& assign, std::vector<bool>& used,
               const std::function<bool(const std::vector<int>&)>& on_found) {
  size_t idx = assign.size();
  if (idx == static_cast<size_t>(pat.num_vertices())) return on_found(assign);
  for (int cand = 0; cand < g.num_vertices(); ++cand) {
    if (deleted[cand] || used[cand]) continue;
    bool ok = true;
    for (size_t prev = 0; prev < idx && ok; ++prev) {
      bool pe = pat.has_edge(static_cast<int>(idx), static_cast<int>(prev));
      bool ge = g.has_edge(cand, assign[prev]);
      if (pe && !ge) ok = false;
      if (induced && !pe && ge) ok = false;
    }
    if (!ok) continue;
    assign.push_back(cand);
    used[cand] = true;
    if (embed_rec(g, deleted, pat, induced, assign, used, on_found)) return true;
    used[cand] = false;
    assign.pop_back();
  }
  return false;
}

}  // namespace

bool has_subgraph_embedding(const Graph& g, const std::vector<bool>& deleted, const Graph& pattern,
                            bool induced) {
  if (pattern.num_vertices() == 0) return true;
  std::vector<int> assign;
  std::vector<bool> used(g.num_vertices(), false);
  return embed_rec(g, deleted, pattern, induced, assign, used,
                   [](const std::vector<int>&) { return true; });
}

std::vector<std::vector<int>> induced_embedding_sets(const Graph& g, const std::vector<bool>& deleted,
                                                     const Graph& pattern) {
  std::set<std::vector<int>> sets;
  if (pattern.num_vertices() == 0) return {};
  std::vector<int> assign;
  std::vector<bool> used(g.num_vertices(), false);
  embed_rec(g, deleted, pattern, true, assign, used, [&](const std::vector<int>& a) {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    sets.insert(s);
    return false;  // keep enumerating
  });
  return {sets.begin(), sets.end()};
}

// --- minimal hitting set enumeration ---

std::vector<std::vector<int>> enumerate_minimal_hitting_sets(const Graph& g, int k,
                                                             const ObstructionFinder& finder) {
  if (g.num_vertices() > 62) throw std::runtime_error("vertex cap exceeded");
  std::set<std::uint64_t> visited;
  std::set<std::vector<int>> clean_sets;
  std::vector<bool> deleted(g.num_vertices(), false);
  std::vector<int> current;

  std::function<void(std::uint64_t)> rec = [&](std::uint64_t mask) {
    if (!visited.insert(mask).second) return;
    auto obs = finder(g, deleted);
    if (!obs) {
      std::vector<int> sorted = current;
      std::sort(sorted.begin(), sorted.end());
      clean_sets.insert(sorted);
      return;
    }
    if (static_cast<int>(current.size()) >= k) return;
    for (int v : obs->vertices) {
      deleted[v] = true;
      current.push_back(v);
      rec(mask | (1ull << v));
      current.pop_back();
      deleted[v] = false;
    }
  };
  rec(0);

  std::vector<std::vector<int>> minimal;
  for (const auto& cand : clean_sets) {
    bool dominated = false;
    for (const auto& other : clean_sets) {
      if (other.size() < cand.size() &&
          std::includes(cand.begin(), cand.end(), other.begin(), other.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(cand);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return minimal;
}

// --- T2 / C3 / C4 obstructions ---

namespace {

std::optional<Obstruction> find_triangle(const Graph& g, const std::vector<bool>& deleted) {
  for (const auto& [u, v] : g.edges()) {
    if (deleted[u] || deleted[v]) continue;
    for (int w : g.neighbors(u)) {
      if (w == v || deleted[w]) continue;
      if (g.has_edge(w, v)) {
        std::vector<int> verts{u, v, w};
        std::sort(verts.begin(), verts.end());
        return Obstruction{verts, "C3"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> find_c4(const Graph& g, const std::vector<bool>& deleted) {
  int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    if (deleted[u]) continue;
    for (int v = u + 1; v < n; ++v) {
      if (deleted[v]) continue;
      std::vector<int> common;
      for (int w : g.neighbors(u)) {
        if (!deleted[w] && w != v && g.has_edge(w, v)) common.push_back(w);
      }
      if (common.size() >= 2) {
        std::vector<int> verts{u, v, common[0], common[1]};
        std::sort(verts.begin(), verts.end());
        return Obstruction{verts, "C4"};
      }
    }
  }
  return std::nullopt;
}

// Center with three vertex-disjoint legs of two edges each.
std::optional<Obstruction> find_spider_t2(const Graph& g, const std::vector<bool>& deleted) {
  int n = g.num_vertices();
  for (int c = 0; c < n; ++c) {
    if (deleted[c]) continue;
    std::vector<int> nbrs = alive_neighbors(g, deleted, c);
    if (nbrs.size() < 3) continue;
    int m = static_cast<int>(nbrs.size());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        for (int l = j + 1; l < m; ++l) {
          int legs[3] = {nbrs[i], nbrs[j], nbrs[l]};
          // Assign distinct leg ends by backtracking over the three legs.
          std::vector<int> ends;
          std::function<bool(int)> assign = [&](int leg) -> bool {
            if (leg == 3) return true;
            for (int e : alive_neighbors(g, deleted, legs[leg])) {
              if (e == c || e == legs[0] || e == legs[1] || e == legs[2]) continue;
              if (std::find(ends.begin(), ends.end(), e) != ends.end()) continue;
              ends.push_back(e);
              if (assign(leg + 1)) return true;
              ends.pop_back();
            }
            return false;
          };
          if (assign(0)) {
            std::vector<int> verts{c, legs[0], legs[1], legs[2], ends[0], ends[1], ends[2]};
            std::sort(verts.begin(), verts.end());
            return Obstruction{verts, "T2"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Obstruction> find_obstruction_t2c3c4(const Graph& g, const std::vector<bool>& deleted) {
  if (auto o = find_triangle(g, deleted)) return o;
  if (auto o = find_c4(g, deleted)) return o;
  return find_spider_t2(g, deleted);
}

std::optional<Obstruction> find_obstruction_t2c3c4(const Graph& g) {
  return find_obstruction_t2c3c4(g, no_deletions(g));
}

bool is_pathwidth_le1(const Graph& g) {
  int comps = static_cast<int>(g.components().size());
  bool acyclic = g.num_edges() == g.num_vertices() - comps;
  if (!acyclic) return false;
  return !find_spider_t2(g, no_deletions(g)).has_value();
}

// --- pathwidth-one structure ---

Pw1Structure pw1_structure(const Graph& g) {
  if (auto obs = find_obstruction_t2c3c4(g)) throw ObstructionError(*obs);
  Pw1Structure out;
  for (const auto& comp : g.components()) {
    Pw1Component pc;
    int nc = static_cast<int>(comp.size());
    int mc = 0;
    for (const auto& [u, v] : g.edges()) {
      if (std::binary_search(comp.begin(), comp.end(), u) &&
          std::binary_search(comp.begin(), comp.end(), v))
        ++mc;
    }
    std::set<int> in_comp(comp.begin(), comp.end());
    if (mc == nc) {
      // Unique cycle with hairs: peel degree-1 vertices to expose the core.
      std::set<int> core(comp.begin(), comp.end());
      bool changed = true;
      while (changed) {
        changed = false;
        for (int v : comp) {
          if (!core.count(v)) continue;
          int deg = 0;
          for (int u : g.neighbors(v)) {
            if (core.count(u)) ++deg;
          }
          if (deg <= 1) {
            core.erase(v);
            changed = true;
          }
        }
      }
      for (int v : comp) {
        if (core.count(v)) continue;
        auto nbrs = g.neighbors(v);
        int live = 0, attach = -1;
        for (int u : nbrs) {
          if (in_comp.count(u)) {
            ++live;
            attach = u;
          }
        }
        if (live != 1 || !core.count(attach))
          throw std::logic_error("cycle component is not a cycle with pendant hairs");
        pc.pendants.push_back(v);  // re-ordered below
      }
      // Walk the cycle from its smallest vertex toward its smaller neighbor.
      int start = *core.begin();
      std::vector<int> cyc_nbrs;
      for (int u : g.neighbors(start)) {
        if (core.count(u)) cyc_nbrs.push_back(u);
      }
      pc.core.push_back(start);
      int prev = start, cur = cyc_nbrs.front();
      while (cur != start) {
        pc.core.push_back(cur);
        int next = -1;
        for (int u : g.neighbors(cur)) {
          if (core.count(u) && u != prev) next = u;
        }
        prev = cur;
        cur = next;
      }
      pc.is_cycle = true;
    } else if (mc == nc - 1) {
      // Caterpillar: the non-leaf vertices form the spine.
      std::vector<int> spine;
      for (int v : comp) {
        int deg = 0;
        for (int u : g.neighbors(v)) {
          if (in_comp.count(u)) ++deg;
        }
        if (deg >= 2) spine.push_back(v);
      }
      if (spine.empty()) {
        pc.core.push_back(comp.front());
        for (size_t i = 1; i < comp.size(); ++i) pc.pendants.push_back(comp[i]);
      } else {
        std::set<int> on_spine(spine.begin(), spine.end());
        int start = -1;
        for (int v : spine) {
          int sd = 0;
          for (int u : g.neighbors(v)) {
            if (on_spine.count(u)) ++sd;
          }
          if (sd <= 1 && (start < 0 || v < start)) start = v;
        }
        if (start < 0) throw std::logic_error("tree component spine is not a path");
        int prev = -1, cur = start;
        while (cur >= 0) {
          pc.core.push_back(cur);
          int next = -1;
          for (int u : g.neighbors(cur)) {
            if (on_spine.count(u) && u != prev) {
              if (next >= 0) throw std::logic_error("tree component spine is not a path");
              next = u;
            }
          }
          prev = cur;
          cur = next;
        }
        if (pc.core.size() != spine.size()) throw std::logic_error("tree component spine is not a path");
        for (int v : comp) {
          if (!on_spine.count(v)) pc.pendants.push_back(v);
        }
      }
    } else {
      throw std::logic_error("component has more edges than a cycle with hairs");
    }
    // Pendants grouped along the core, ascending inside each group.
    std::vector<int> ordered_pendants;
    std::set<int> pend(pc.pendants.begin(), pc.pendants.end());
    for (int c : pc.core) {
      std::vector<int> mine;
      for (int u : g.neighbors(c)) {
        if (pend.count(u)) mine.push_back(u);
      }
      std::sort(mine.begin(), mine.end());
      ordered_pendants.insert(ordered_pendants.end(), mine.begin(), mine.end());
    }
    pc.pendants = ordered_pendants;
    out.components.push_back(std::move(pc));
  }
  for (const auto& pc : out.components) {
    out.ordering.sequence.insert(out.ordering.sequence.end(), pc.core.begin(), pc.core.end());
    out.ordering.sequence.insert(out.ordering.sequence.end(), pc.pendants.begin(), pc.pendants.end());
  }
  out.ordering.claimed_degeneracy = max_back_degree(g, out.ordering.sequence);
  return out;
}

// --- treedepth ---

namespace {

int treedepth_mask(const Graph& g, std::uint32_t mask, std::map<std::uint32_t, int>& memo);

int treedepth_connected(const Graph& g, std::uint32_t mask, std::map<std::uint32_t, int>& memo) {
  int cnt = __builtin_popcount(mask);
  if (cnt == 1) return 1;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int best = cnt;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (((mask >> v) & 1) == 0) continue;
    int sub = treedepth_mask(g, mask & ~(1u << v), memo);
    best = std::min(best, 1 + sub);
  }
  memo[mask] = best;
  return best;
}

int treedepth_mask(const Graph& g, std::uint32_t mask, std::map<std::uint32_t, int>& memo) {
  if (mask == 0) return 0;
  // Split into connected pieces.
  int best = 0;
  std::uint32_t rest = mask;
  while (rest != 0) {
    int v = __builtin_ctz(rest);
    std::uint32_t comp = 1u << v;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (((mask >> w) & 1) && ((comp >> w) & 1) == 0) {
          comp |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    best = std::max(best, treedepth_connected(g, comp, memo));
    rest &= ~comp;
  }
  return best;
}

}  // namespace

int treedepth(const Graph& g) {
  if (g.num_vertices() > 16) throw std::runtime_error("treedepth cap is 16 vertices");
  if (g.num_vertices() == 0) return 0;
  std::map<std::uint32_t, int> memo;
  std::uint32_t all = g.num_vertices() == 32 ? ~0u : ((1u << g.num_vertices()) - 1);
  return treedepth_mask(g, all, memo);
}

std::optional<Obstruction> find_td_obstruction(const Graph& g, int eta) {
  if (eta == 1) {
    // Treedepth > 1 means some edge exists.
    if (g.num_edges() > 0) {
      auto [u, v] = g.edges().front();
      return Obstruction{{u, v}, "td-obstruction"};
    }
    return std::nullopt;
  }
  if (eta == 2) {
    // Treedepth <= 2 graphs are star forests: a triangle or P4 witnesses more.
    if (auto t = find_triangle(g, no_deletions(g))) return Obstruction{t->vertices, "td-obstruction"};
    if (auto p = find_path_subgraph(g, 4)) return Obstruction{p->vertices, "td-obstruction"};
    return std::nullopt;
  }
  throw std::invalid_argument("treedepth obstructions supported for eta in {1,2} only");
}

std::optional<Obstruction> find_path_subgraph(const Graph& g, const std::vector<bool>& deleted, int eta) {
  if (eta < 2) throw std::invalid_argument("paths of interest have at least 2 vertices");
  std::vector<int> path;
  std::vector<bool> used(g.num_vertices(), false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    path.push_back(v);
    used[v] = true;
    if (static_cast<int>(path.size()) == eta) return true;
    for (int u : g.neighbors(v)) {
      if (!deleted[u] && !used[u]) {
        if (extend(u)) return true;
      }
    }
    path.pop_back();
    used[v] = false;
    return false;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!deleted[v] && extend(v)) {
      std::vector<int> verts = path;
      std::sort(verts.begin(), verts.end());
      return Obstruction{verts, "path"};
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> find_path_subgraph(const Graph& g, int eta) {
  return find_path_subgraph(g, no_deletions(g), eta);
}

// --- scattered machinery ---

namespace {

void check_family_caps(const std::vector<Graph>& fam) {
  if (fam.empty()) throw std::invalid_argument("forbidden family must be nonempty");
  for (const auto& h : fam) {
    if (h.num_vertices() < 1 || h.num_vertices() > 7)
      throw std::invalid_argument("forbidden family members are capped at 7 vertices");
  }
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push(v);
        }
      }
    }
  }
  return dist;
}

std::optional<ForbiddenPair> closest_pair_impl(const Graph& g, const std::vector<bool>& deleted,
                                               const std::vector<Graph>& f1, const std::vector<Graph>& f2) {
  std::vector<std::vector<int>> emb1, emb2;
  for (const auto& h : f1) {
    for (auto& s : induced_embedding_sets(g, deleted, h)) emb1.push_back(std::move(s));
  }
  for (const auto& h : f2) {
    for (auto& s : induced_embedding_sets(g, deleted, h)) emb2.push_back(std::move(s));
  }
  if (emb1.empty() || emb2.empty()) return std::nullopt;
  std::sort(emb1.begin(), emb1.end());
  std::sort(emb2.begin(), emb2.end());

  // Distances in the alive graph only.
  Graph alive = g;
  {
    std::vector<int> keep = alive_vertices(g, deleted);
    std::vector<int> map;
    Graph h = g.induced(keep, &map);
    std::vector<std::vector<int>> dist = all_distances(h);
    ForbiddenPair best;
    int best_u = -1, best_v = -1;
    auto local = [&](int v) {
      return static_cast<int>(std::lower_bound(map.begin(), map.end(), v) - map.begin());
    };
    for (const auto& a : emb1) {
      for (const auto& b : emb2) {
        int d = -1, du = -1, dv = -1;
        for (int u : a) {
          for (int v : b) {
            int dd = dist[local(u)][local(v)];
            if (dd >= 0 && (d < 0 || dd < d)) {
              d = dd;
              du = u;
              dv = v;
            }
          }
        }
        bool better = false;
        if (best.first_set.empty()) {
          better = true;
        } else if (best.distance < 0) {
          better = d >= 0;
        } else if (d >= 0 && d < best.distance) {
          better = true;
        }
        if (better) {
          best.first_set = a;
          best.second_set = b;
          best.distance = d;
          best_u = du;
          best_v = dv;
        }
      }
    }
    if (best.distance >= 0) {
      // Reconstruct one shortest path (smallest-id predecessors).
      int s = local(best_u), t = local(best_v);
      std::vector<int> par(h.num_vertices(), -2);
      std::queue<int> q;
      q.push(s);
      par[s] = -1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : h.neighbors(u)) {
          if (par[v] == -2) {
            par[v] = u;
            q.push(v);
          }
        }
      }
      for (int cur = t; cur != -1; cur = par[cur]) best.path.push_back(map[cur]);
      std::reverse(best.path.begin(), best.path.end());
    }
    return best;
  }
}

}  // namespace

std::optional<ForbiddenPair> closest_forbidden_pair(const Graph& g, const std::vector<Graph>& f1,
                                                    const std::vector<Graph>& f2) {
  check_family_caps(f1);
  check_family_caps(f2);
  return closest_pair_impl(g, no_deletions(g), f1, f2);
}

bool scattered_clean(const Graph& g, const std::vector<Graph>& f1, const std::vector<Graph>& f2) {
  for (const auto& comp : g.components()) {
    Graph h = g.induced(comp);
    auto none = no_deletions(h);
    bool hits1 = false, hits2 = false;
    for (const auto& pat : f1) {
      if (has_subgraph_embedding(h, none, pat, true)) {
        hits1 = true;
        break;
      }
    }
    if (!hits1) continue;
    for (const auto& pat : f2) {
      if (has_subgraph_embedding(h, none, pat, true)) {
        hits2 = true;
        break;
      }
    }
    if (hits1 && hits2) return false;
  }
  return true;
}

// --- residual predicates ---

bool max_degree_at_most(const Graph& g, int eta) { return g.max_degree() <= eta; }

bool treedepth_le_small(const Graph& g, int eta) {
  if (eta == 1) return g.num_edges() == 0;
  if (eta == 2) {
    // Star forests: no triangle, no path on four vertices.
    return !find_triangle(g, no_deletions(g)) && !find_path_subgraph(g, 4);
  }
  throw std::invalid_argument("treedepth residual test supported for eta in {1,2} only");
}

bool path_free(const Graph& g, int eta) { return !find_path_subgraph(g, eta).has_value(); }

bool deletion_connectivity_ok(const Graph& g, const std::vector<int>& s, int p, bool strict_singleton) {
  if (s.empty()) return true;  // deleting nothing places no constraint
  if (s.size() == 1) return !strict_singleton;
  return is_p_edge_connected(g, s, p, strict_singleton);
}

// --- the pathwidth-one constrained table run ---

namespace {

class Pw1DpGuard : public DpGuard {
 public:
  Pw1DpGuard(const Pw1Structure& st, const std::vector<int>& pos_of, int n_positions) {
    comp_of_pos_.assign(n_positions + 1, -1);
    in_cycle_pos_.assign(n_positions + 1, false);
    int nc = static_cast<int>(st.components.size());
    cycle_lo_.assign(nc, 0);
    cycle_hi_.assign(nc, 0);
    cycle_mask_.assign(nc, 0);
    cyclic_.assign(nc, false);
    for (int ci = 0; ci < nc; ++ci) {
      const auto& pc = st.components[ci];
      cyclic_[ci] = pc.is_cycle;
      for (int v : pc.core) {
        int pos = pos_of[v];
        comp_of_pos_[pos] = ci;
        if (pc.is_cycle) {
          in_cycle_pos_[pos] = true;
          cycle_mask_[ci] |= 1ull << v;
          if (cycle_lo_[ci] == 0 || pos < cycle_lo_[ci]) cycle_lo_[ci] = pos;
          if (pos > cycle_hi_[ci]) cycle_hi_[ci] = pos;
        }
      }
      for (int v : pc.pendants) comp_of_pos_[pos_of[v]] = ci;
    }
  }

  int base_state() const override { return 1; }

  std::optional<int> transition(int src_state, int src_pos, int tgt_pos,
                                std::uint64_t entering_mask) const override {
    int tgt_comp = comp_of_pos_[tgt_pos];
    int src_comp = src_pos == 0 ? -1 : comp_of_pos_[src_pos];
    // Leaving a cyclic component whose cycle was never touched is fatal.
    if (src_comp >= 0 && src_comp != tgt_comp && cyclic_[src_comp] && src_state == 0)
      return std::nullopt;
    // Any other cycle wholly skipped by this jump can never be hit.
    for (size_t ci = 0; ci < cyclic_.size(); ++ci) {
      if (!cyclic_[ci] || static_cast<int>(ci) == tgt_comp || static_cast<int>(ci) == src_comp) continue;
      if (cycle_lo_[ci] > src_pos && cycle_hi_[ci] < tgt_pos) return std::nullopt;
    }
    if (tgt_comp < 0 || !cyclic_[tgt_comp]) return 1;
    bool hit = in_cycle_pos_[tgt_pos] || (entering_mask & cycle_mask_[tgt_comp]) != 0;
    if (src_comp == tgt_comp) return (src_state == 1 || hit) ? 1 : 0;
    return hit ? 1 : 0;
  }

  bool accept_final(int state, int last_pos) const override {
    if (last_pos == 0) {
      for (bool c : cyclic_) {
        if (c) return false;
      }
      return true;
    }
    int comp = comp_of_pos_[last_pos];
    if (comp >= 0 && cyclic_[comp] && state == 0) return false;
    for (size_t ci = 0; ci < cyclic_.size(); ++ci) {
      if (cyclic_[ci] && static_cast<int>(ci) != comp && cycle_lo_[ci] > last_pos) return false;
    }
    return true;
  }

 private:
  std::vector<int> comp_of_pos_;
  std::vector<bool> in_cycle_pos_;
  std::vector<int> cycle_lo_, cycle_hi_;
  std::vector<std::uint64_t> cycle_mask_;
  std::vector<bool> cyclic_;
};

// Extension step of the pathwidth-one solver: S >= x of exact sizes up to k,
// p-edge-connected, touching every cycle of g - x.
std::optional<std::pair<std::vector<int>, int>> pw1_search(const Graph& g, const std::vector<int>& x,
                                                           int k, int p, const DeletionOptions& opt) {
  std::vector<int> rest;
  {
    std::vector<bool> in_x(g.num_vertices(), false);
    for (int v : x) in_x[v] = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!in_x[v]) rest.push_back(v);
    }
  }
  std::vector<int> map;
  Graph h = g.induced(rest, &map);
  Pw1Structure st_local = pw1_structure(h);
  Pw1Structure st;
  st.ordering.claimed_degeneracy = st_local.ordering.claimed_degeneracy;
  for (const auto& pc : st_local.components) {
    Pw1Component out;
    out.is_cycle = pc.is_cycle;
    for (int v : pc.core) out.core.push_back(map[v]);
    for (int v : pc.pendants) out.pendants.push_back(map[v]);
    st.components.push_back(std::move(out));
  }
  for (int v : st_local.ordering.sequence) st.ordering.sequence.push_back(map[v]);

  int n_positions = static_cast<int>(st.ordering.sequence.size());
  std::vector<int> pos_of(g.num_vertices(), 0);
  for (int i = 0; i < n_positions; ++i) pos_of[st.ordering.sequence[i]] = i + 1;
  Pw1DpGuard guard(st, pos_of, n_positions);

  PrimeField field = opt.field_prime ? PrimeField(opt.field_prime) : default_field(g);
  int root = *std::min_element(x.begin(), x.end());
  int lo = std::max(static_cast<int>(x.size()), 2);
  for (int kk = lo; kk <= std::min(k, g.num_vertices()); ++kk) {
    if (kk == static_cast<int>(x.size())) continue;
    if (sse_matroid_rank_bound(g, root, kk, p) < 3 * p * (kk - 1)) continue;
    SseMatroid m = build_sse_matroid(g, root, kk, p, field, opt.seed);
    DpRunConfig cfg;
    cfg.k = kk;
    cfg.p = p;
    cfg.cap_arc_degree = opt.cap_arc_degree;
    SseDpEngine engine(g, x, st.ordering, m, guard, cfg);
    auto sol = engine.run();
    if (sol) {
      if (!is_pathwidth_le1(minus(g, *sol))) continue;  // truncation misfire guard
      return std::make_pair(*sol, 3 * p * (kk - 1));
    }
  }
  return std::nullopt;
}

// --- shared enumerate-then-extend driver ---

SseResult first_yes(const std::vector<std::vector<int>>& candidates,
                    const std::function<SseResult(const std::vector<int>&)>& eval, int jobs) {
  if (jobs <= 1) {
    for (const auto& cand : candidates) {
      SseResult r = eval(cand);
      if (r.yes) return r;
    }
    return {};
  }
  for (size_t base = 0; base < candidates.size(); base += jobs) {
    size_t end = std::min(candidates.size(), base + jobs);
    std::vector<std::future<SseResult>> futs;
    for (size_t i = base; i < end; ++i) {
      futs.push_back(std::async(std::launch::async, eval, std::cref(candidates[i])));
    }
    SseResult hit;
    for (auto& f : futs) {
      SseResult r = f.get();
      if (r.yes && !hit.yes) hit = r;  // first in candidate order wins
    }
    if (hit.yes) return hit;
  }
  return {};
}

SseResult run_deletion(const Graph& g, int k, int p, const DeletionOptions& opt,
                       const ObstructionFinder& finder,
                       const std::function<bool(const Graph&)>& residual_ok,
                       const std::function<SseResult(const std::vector<int>&)>& extend) {
  if (k < 0 || p < 1) throw std::invalid_argument("need k >= 0 and p >= 1");
  auto candidates = enumerate_minimal_hitting_sets(g, k, finder);
  auto eval = [&](const std::vector<int>& cand) -> SseResult {
    if (residual_ok(minus(g, cand)) && deletion_connectivity_ok(g, cand, p, opt.strict_singleton)) {
      SseResult r;
      r.yes = true;
      r.solution = cand;
      return r;
    }
    return extend(cand);
  };
  return first_yes(candidates, eval, opt.jobs);
}

SseOptions to_sse_options(const DeletionOptions& opt) {
  SseOptions s;
  s.seed = opt.seed;
  s.strict_singleton = opt.strict_singleton;
  s.field_prime = opt.field_prime;
  s.cap_arc_degree = opt.cap_arc_degree;
  return s;
}

}  // namespace

SseResult solve_bdds(const Graph& g, int k, int p, int eta, const DeletionOptions& opt) {
  if (eta < 0) throw std::invalid_argument("eta must be nonnegative");
  ObstructionFinder finder = [eta](const Graph& gg, const std::vector<bool>& deleted) -> std::optional<Obstruction> {
    for (int u = 0; u < gg.num_vertices(); ++u) {
      if (deleted[u]) continue;
      auto nbrs = alive_neighbors(gg, deleted, u);
      if (static_cast<int>(nbrs.size()) >= eta + 1) {
        std::vector<int> verts{u};
        for (int i = 0; i <= eta && i < static_cast<int>(nbrs.size()); ++i) verts.push_back(nbrs[i]);
        std::sort(verts.begin(), verts.end());
        return Obstruction{verts, "star"};
      }
    }
    return std::nullopt;
  };
  return run_deletion(
      g, k, p, opt, finder, [eta](const Graph& rest) { return max_degree_at_most(rest, eta); },
      [&](const std::vector<int>& cand) { return solve_extension(g, cand, k, p, to_sse_options(opt)); });
}

SseResult solve_pw1ds(const Graph& g, int k, int p, const DeletionOptions& opt) {
  ObstructionFinder finder = [](const Graph& gg, const std::vector<bool>& deleted) {
    return find_obstruction_t2c3c4(gg, deleted);
  };
  auto extend = [&](const std::vector<int>& cand) -> SseResult {
    SseResult out;
    auto pack = [&](std::pair<std::vector<int>, int> hit) {
      out.yes = true;
      out.solution = hit.first;
      out.certificate_size = hit.second;
    };
    if (!cand.empty()) {
      if (auto hit = pw1_search(g, cand, k, p, opt)) pack(*hit);
      return out;
    }
    // No forced vertices: anchor at every start, then singleton fallback.
    for (int u = 0; u < g.num_vertices() && k >= 2; ++u) {
      if (auto hit = pw1_search(g, {u}, k, p, opt)) {
        pack(*hit);
        return out;
      }
    }
    if (!opt.strict_singleton && k >= 1) {
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (is_pathwidth_le1(minus(g, {v}))) {
          out.yes = true;
          out.solution = {v};
          return out;
        }
      }
    }
    return out;
  };
  return run_deletion(g, k, p, opt, finder, [](const Graph& rest) { return is_pathwidth_le1(rest); },
                      extend);
}

SseResult solve_tdds(const Graph& g, int k, int p, int eta, const DeletionOptions& opt) {
  if (eta != 1 && eta != 2) throw std::invalid_argument("treedepth deletion supported for eta in {1,2}");
  ObstructionFinder finder = [eta](const Graph& gg, const std::vector<bool>& deleted) -> std::optional<Obstruction> {
    if (eta == 1) {
      for (const auto& [u, v] : gg.edges()) {
        if (!deleted[u] && !deleted[v]) return Obstruction{{u, v}, "td-obstruction"};
      }
      return std::nullopt;
    }
    if (auto t = find_triangle(gg, deleted)) return Obstruction{t->vertices, "td-obstruction"};
    if (auto pth = find_path_subgraph(gg, deleted, 4)) return Obstruction{pth->vertices, "td-obstruction"};
    return std::nullopt;
  };
  return run_deletion(
      g, k, p, opt, finder, [eta](const Graph& rest) { return treedepth_le_small(rest, eta); },
      [&](const std::vector<int>& cand) { return solve_extension(g, cand, k, p, to_sse_options(opt)); });
}

SseResult solve_pvc(const Graph& g, int k, int p, int eta, const DeletionOptions& opt) {
  if (eta < 2) throw std::invalid_argument("path cover needs eta >= 2");
  ObstructionFinder finder = [eta](const Graph& gg, const std::vector<bool>& deleted) {
    return find_path_subgraph(gg, deleted, eta);
  };
  return run_deletion(
      g, k, p, opt, finder, [eta](const Graph& rest) { return path_free(rest, eta); },
      [&](const std::vector<int>& cand) { return solve_extension(g, cand, k, p, to_sse_options(opt)); });
}

SseResult solve_scattered(const Graph& g, int k, int p, const std::vector<Graph>& f1,
                          const std::vector<Graph>& f2, int lambda, const DeletionOptions& opt) {
  check_family_caps(f1);
  check_family_caps(f2);
  auto is_path = [lambda](const Graph& h) {
    return h.num_vertices() == lambda && h.num_edges() == lambda - 1 && h.is_connected() &&
           h.max_degree() <= (lambda >= 3 ? 2 : 1);
  };
  bool in_f1 = std::any_of(f1.begin(), f1.end(), is_path);
  bool in_f2 = std::any_of(f2.begin(), f2.end(), is_path);
  if (!in_f1 && !in_f2)
    throw std::invalid_argument("the path with lambda vertices must belong to one family");
  // The branching bound needs the path obstruction in the first family.
  const std::vector<Graph>& fam1 = in_f1 ? f1 : f2;
  const std::vector<Graph>& fam2 = in_f1 ? f2 : f1;

  ObstructionFinder finder = [&fam1, &fam2](const Graph& gg,
                                            const std::vector<bool>& deleted) -> std::optional<Obstruction> {
    auto pair = closest_pair_impl(gg, deleted, fam1, fam2);
    if (!pair || pair->distance < 0) return std::nullopt;  // clean or separated families
    std::set<int> verts(pair->first_set.begin(), pair->first_set.end());
    verts.insert(pair->second_set.begin(), pair->second_set.end());
    verts.insert(pair->path.begin(), pair->path.end());
    return Obstruction{{verts.begin(), verts.end()}, "custom"};
  };
  return run_deletion(
      g, k, p, opt, finder,
      [&](const Graph& rest) { return scattered_clean(rest, fam1, fam2); },
      [&](const std::vector<int>& cand) { return solve_extension(g, cand, k, p, to_sse_options(opt)); });
}

}  // namespace sse
