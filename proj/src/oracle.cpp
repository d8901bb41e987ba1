#include "sse/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sse/connectivity.hpp"
#include "sse/deletion.hpp"

namespace sse::oracle {

namespace {

Graph minus(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> drop(g.num_vertices(), false);
  for (int v : removed) drop[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return g.induced(keep);
}

bool connected_after_deleting(const Graph& g, const std::vector<int>& edge_idx) {
  int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (std::find(edge_idx.begin(), edge_idx.end(), e) != edge_idx.end()) continue;
    auto [u, v] = g.edges()[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
        ++cnt;
      }
    }
  }
  return cnt == n;
}

bool edge_deletion_connectivity(const Graph& h, int p) {
  // p-edge-connected iff connected after deleting any p-1 edges.
  std::vector<int> chosen;
  std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
    if (left == 0) return connected_after_deleting(h, chosen);
    for (int e = start; e < h.num_edges(); ++e) {
      chosen.push_back(e);
      bool ok = rec(e + 1, left - 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, p - 1);
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint64_t> masks_by_size(int n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(1ull << n);
  for (std::uint64_t m = 0; m < (1ull << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

}  // namespace

bool is_p_edge_connected_brute(const Graph& g, const std::vector<int>& s, int p, bool strict_singleton) {
  if (s.empty()) return false;
  if (s.size() == 1) return !strict_singleton;
  Graph h = g.induced(s);
  if (!h.is_connected()) return false;
  if (binom(h.num_edges(), p - 1) <= 100000) return edge_deletion_connectivity(h, p);
  for (int v = 1; v < h.num_vertices(); ++v) {
    if (min_cut_value(h, 0, v) < p) return false;
  }
  return true;
}

SseResult brute_solve_sse(const Graph& g, const std::vector<int>& x, int k, int p, bool strict_singleton) {
  if (g.num_vertices() > 14) throw std::runtime_error("brute-force cap is 14 vertices");
  std::uint64_t xmask = 0;
  for (int v : x) xmask |= 1ull << v;
  SseResult out;
  if (k < static_cast<int>(x.size())) return out;
  for (std::uint64_t mask : masks_by_size(g.num_vertices())) {
    if ((mask & xmask) != xmask) continue;
    int size = __builtin_popcountll(mask);
    if (size < 1 || size > k) continue;
    std::vector<int> s = mask_vertices(mask);
    bool ok = size == 1 ? !strict_singleton : is_p_edge_connected_brute(g, s, p, strict_singleton);
    if (ok) {
      out.yes = true;
      out.solution = s;
      return out;
    }
  }
  return out;
}

SseResult brute_deletion(const std::string& problem, const Graph& g, int k, int p,
                         const std::map<std::string, int>& extras, bool strict_singleton,
                         const std::vector<Graph>* f1, const std::vector<Graph>* f2) {
  if (g.num_vertices() > 12) throw std::runtime_error("brute-force cap is 12 vertices");
  auto extra = [&](const std::string& key) {
    auto it = extras.find(key);
    if (it == extras.end()) throw std::invalid_argument("missing extras key " + key);
    return it->second;
  };
  std::function<bool(const Graph&)> residual_ok;
  if (problem == "bdds") {
    int eta = extra("eta");
    residual_ok = [eta](const Graph& h) { return h.max_degree() <= eta; };
  } else if (problem == "pw1ds") {
    residual_ok = [](const Graph& h) {
      if (h.num_vertices() <= 8) return pathwidth_le1_by_search(h);
      int comps = static_cast<int>(h.components().size());
      if (h.num_edges() != h.num_vertices() - comps) return false;
      Graph spider(7);
      spider.add_edge(0, 1);
      spider.add_edge(1, 2);
      spider.add_edge(0, 3);
      spider.add_edge(3, 4);
      spider.add_edge(0, 5);
      spider.add_edge(5, 6);
      return !contains_subgraph(h, spider, false);
    };
  } else if (problem == "tdds") {
    int eta = extra("eta");
    residual_ok = [eta](const Graph& h) { return treedepth(h) <= eta; };
  } else if (problem == "pvc") {
    int eta = extra("eta");
    residual_ok = [eta](const Graph& h) {
      Graph path(eta);
      for (int i = 0; i + 1 < eta; ++i) path.add_edge(i, i + 1);
      return !contains_subgraph(h, path, false);
    };
  } else if (problem == "scattered") {
    if (!f1 || !f2) throw std::invalid_argument("scattered needs both families");
    residual_ok = [f1, f2](const Graph& h) {
      for (const auto& comp : h.components()) {
        Graph c = h.induced(comp);
        bool hits1 = false, hits2 = false;
        for (const auto& pat : *f1) {
          if (contains_subgraph(c, pat, true)) {
            hits1 = true;
            break;
          }
        }
        if (!hits1) continue;
        for (const auto& pat : *f2) {
          if (contains_subgraph(c, pat, true)) {
            hits2 = true;
            break;
          }
        }
        if (hits1 && hits2) return false;
      }
      return true;
    };
  } else {
    throw std::invalid_argument("unknown deletion problem tag " + problem);
  }

  SseResult out;
  if (k < 0) return out;
  for (std::uint64_t mask : masks_by_size(g.num_vertices())) {
    int size = __builtin_popcountll(mask);
    if (size > k) continue;
    std::vector<int> s = mask_vertices(mask);
    bool conn_ok = s.empty() ? true
                   : s.size() == 1
                       ? !strict_singleton
                       : is_p_edge_connected_brute(g, s, p, strict_singleton);
    if (!conn_ok) continue;
    if (!residual_ok(minus(g, s))) continue;
    out.yes = true;
    out.solution = s;
    return out;
  }
  return out;
}

bool brute_repfam_check(const LinearMatroid& m, const SetFamily& fam, const SetFamily& reduced, int q) {
  int n = m.ground_size();
  long long total = 0;
  for (int size = 0; size <= q; ++size) total += binom(n, size);
  if (total > 2000000) throw std::runtime_error("too many extension targets to enumerate");
  std::vector<int> target;
  bool ok = true;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (!ok) return;
    if (left == 0) {
      auto has_extender = [&](const SetFamily& family) {
        for (const auto& member : family.sets) {
          if (extends(m, member, target)) return true;
        }
        return false;
      };
      if (has_extender(fam) != has_extender(reduced)) ok = false;
      return;
    }
    for (int e = start; e < n && ok; ++e) {
      target.push_back(e);
      rec(e + 1, left - 1);
      target.pop_back();
    }
  };
  for (int size = 0; size <= q && ok; ++size) rec(0, size);
  return ok;
}

bool pathwidth_le1_by_search(const Graph& g) {
  int n = g.num_vertices();
  if (n > 8) throw std::runtime_error("exhaustive pathwidth search cap is 8 vertices");
  if (n == 0) return true;
  // Vertex separation: f(S) = min over v in S of max(f(S-v), boundary(S)).
  int full = (1 << n) - 1;
  std::vector<int> f(full + 1, 1 << 20);
  f[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    int boundary = 0;
    for (int v = 0; v < n; ++v) {
      if (((mask >> v) & 1) == 0) continue;
      for (int u : g.neighbors(v)) {
        if (((mask >> u) & 1) == 0) {
          ++boundary;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (((mask >> v) & 1) == 0) continue;
      f[mask] = std::min(f[mask], std::max(f[mask & ~(1 << v)], boundary));
    }
  }
  return f[full] <= 1;
}

bool contains_subgraph(const Graph& g, const Graph& pattern, bool induced) {
  int pn = pattern.num_vertices();
  if (pn == 0) return true;
  std::vector<int> assign;
  std::vector<bool> used(g.num_vertices(), false);
  std::function<bool()> rec = [&]() -> bool {
    int idx = static_cast<int>(assign.size());
    if (idx == pn) return true;
    for (int cand = 0; cand < g.num_vertices(); ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev) {
        bool pe = pattern.has_edge(idx, prev);
        bool ge = g.has_edge(cand, assign[prev]);
        if (pe && !ge) ok = false;
        if (induced && !pe && ge) ok = false;
      }
      if (!ok) continue;
      assign.push_back(cand);
      used[cand] = true;
      if (rec()) return true;
      used[cand] = false;
      assign.pop_back();
    }
    return false;
  };
  return rec();
}

bool is_out_branching(const EquivalentDigraph& d, const std::vector<int>& arc_ids) {
  int n = d.base.num_vertices();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int a : arc_ids) {
    auto [tail, head] = d.arcs[a];
    ++indeg[head];
    out[tail].push_back(head);
  }
  if (indeg[d.root] != 0) return false;
  for (int v = 0; v < n; ++v) {
    if (v != d.root && indeg[v] != 1) return false;
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{d.root};
  seen[d.root] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : out[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
        ++cnt;
      }
    }
  }
  return cnt == n;
}

namespace {

// Enumerate out-branchings over available arcs; on each, recurse to the next level.
bool pack_rec(const EquivalentDigraph& d, std::vector<bool>& used, int level, int p) {
  if (level == p) return true;
  int n = d.base.num_vertices();
  std::vector<std::vector<int>> in_arcs(n);
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (!used[a]) in_arcs[d.arcs[a].second].push_back(a);
  }
  std::vector<int> targets;
  for (int v = 0; v < n; ++v) {
    if (v != d.root) targets.push_back(v);
  }
  std::vector<int> picked;
  std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
    if (idx == targets.size()) {
      if (!is_out_branching(d, picked)) return false;
      for (int a : picked) used[a] = true;
      bool ok = pack_rec(d, used, level + 1, p);
      for (int a : picked) used[a] = false;
      return ok;
    }
    for (int a : in_arcs[targets[idx]]) {
      picked.push_back(a);
      if (assign(idx + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  return assign(0);
}

}  // namespace

bool packs_out_branchings(const Graph& g, int root, int p) {
  if (g.num_vertices() > 7) throw std::runtime_error("packing search cap is 7 vertices");
  if (g.num_vertices() <= 1) return true;
  EquivalentDigraph d = equivalent_digraph(g, root);
  std::vector<bool> used(d.num_arcs(), false);
  return pack_rec(d, used, 0, p);
}

}  // namespace sse::oracle
