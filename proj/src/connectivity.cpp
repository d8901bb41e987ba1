#include "sse/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sse {

namespace {

// Edmonds-Karp with per-edge integer capacities (unit for simple graphs).
// limit caps the flow searched for; pass a large value for the exact cut.
struct FlowNet {
  struct Edge {
    int to, cap;
  };
  std::vector<Edge> edges;                // paired: e^1 is the reverse of e
  std::vector<std::vector<int>> at;       // vertex -> incident edge ids

  explicit FlowNet(int n) : at(n) {}

  void add_undirected(int u, int v, int cap) {
    at[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap});
    at[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, cap});
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> via(at.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int u = q.front();
        q.pop();
        for (int eid : at[u]) {
          const Edge& e = edges[eid];
          if (e.cap > 0 && via[e.to] == -1) {
            via[e.to] = eid;
            q.push(e.to);
          }
        }
      }
      if (via[t] == -1) break;
      int push = limit - flow;
      for (int v = t; v != s;) {
        int eid = via[v];
        push = std::min(push, edges[eid].cap);
        v = edges[eid ^ 1].to;
      }
      for (int v = t; v != s;) {
        int eid = via[v];
        edges[eid].cap -= push;
        edges[eid ^ 1].cap += push;
        v = edges[eid ^ 1].to;
      }
      flow += push;
    }
    return flow;
  }
};

int cut_between(const Graph& g, int u, int v, int limit) {
  FlowNet net(g.num_vertices());
  for (const auto& [a, b] : g.edges()) net.add_undirected(a, b, 1);
  return net.max_flow(u, v, limit);
}

constexpr int kNoLimit = 1 << 28;

}  // namespace

int min_cut_value(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("min_cut_value requires distinct vertices");
  if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices())
    throw std::invalid_argument("vertex out of range");
  return cut_between(g, u, v, kNoLimit);
}

int edge_connectivity(const Graph& g) {
  int n = g.num_vertices();
  if (n <= 1) return 0;
  int best = kNoLimit;
  for (int v = 1; v < n; ++v) best = std::min(best, cut_between(g, 0, v, best));
  return best;
}

bool is_p_edge_connected(const Graph& g, const std::vector<int>& s, int p, bool strict_singleton) {
  if (s.empty()) return false;
  if (s.size() == 1) return !strict_singleton;
  Graph h = g.induced(s);
  if (!h.is_connected()) return false;
  for (int v = 1; v < h.num_vertices(); ++v) {
    if (cut_between(h, 0, v, p) < p) return false;
  }
  return true;
}

SegmentPartition p_segments(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  int n = g.num_vertices();
  SegmentPartition out;
  out.p = p;
  if (n == 0) return out;
  // Gusfield flow-equivalent tree: parent pointers plus min-cut labels.
  std::vector<int> parent(n, 0), label(n, 0);
  for (int v = 1; v < n; ++v) {
    FlowNet net(n);
    for (const auto& [a, b] : g.edges()) net.add_undirected(a, b, 1);
    label[v] = net.max_flow(v, parent[v], kNoLimit);
    // Rehang siblings that end on our side of the cut.
    std::vector<bool> side(n, false);
    {
      std::vector<int> stack{v};
      side[v] = true;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int eid : net.at[u]) {
          const auto& e = net.edges[eid];
          if (e.cap > 0 && !side[e.to]) {
            side[e.to] = true;
            stack.push_back(e.to);
          }
        }
      }
    }
    for (int w = v + 1; w < n; ++w) {
      if (parent[w] == parent[v] && side[w]) parent[w] = v;
    }
  }
  // Same segment iff every tree edge on the path has label >= p: union
  // components of the tree restricted to labels >= p.
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = v;
  std::function<int(int)> find = [&](int v) { return rep[v] == v ? v : rep[v] = find(rep[v]); };
  for (int v = 1; v < n; ++v) {
    if (label[v] >= p) rep[find(v)] = find(parent[v]);
  }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  for (auto& grp : groups) {
    if (!grp.empty()) out.segments.push_back(std::move(grp));
  }
  std::sort(out.segments.begin(), out.segments.end());
  return out;
}

namespace {

std::optional<std::vector<int>> descend_superset(const Graph& g, const std::vector<int>& x,
                                                 const std::vector<int>& current, int p, bool strict) {
  if (is_p_edge_connected(g, current, p, strict)) return current;
  if (current.size() <= 1) return std::nullopt;
  Graph h = g.induced(current);
  SegmentPartition segs = p_segments(h, p);
  if (segs.segments.size() <= 1) return std::nullopt;  // cannot split further
  for (const auto& seg_local : segs.segments) {
    std::vector<int> seg;
    seg.reserve(seg_local.size());
    for (int v : seg_local) seg.push_back(current[v]);
    bool contains_x = std::includes(seg.begin(), seg.end(), x.begin(), x.end());
    if (!x.empty() && !contains_x) continue;
    auto r = descend_superset(g, x, seg, p, strict);
    if (r) return r;
    if (!x.empty()) return std::nullopt;  // the unique segment holding x failed
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> feasible_superset(const Graph& g, const std::vector<int>& x, int p,
                                                  bool strict_singleton) {
  if (!g.is_connected()) throw std::invalid_argument("feasible_superset requires a connected graph");
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int v : xs) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("terminal out of range");
  }
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return descend_superset(g, xs, all, p, strict_singleton);
}

namespace {

std::optional<std::vector<int>> descend_deletion(const Graph& g, const std::vector<int>& current, int p,
                                                 const std::function<bool(const Graph&)>& recognizer,
                                                 bool strict) {
  std::vector<int> rest;
  {
    std::vector<bool> in(g.num_vertices(), false);
    for (int v : current) in[v] = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!in[v]) rest.push_back(v);
    }
  }
  bool residual_ok = recognizer(g.induced(rest));
  if (residual_ok && is_p_edge_connected(g, current, p, strict)) return current;
  if (current.size() <= 1) return std::nullopt;
  // Hereditary classes: descending into a segment only helps if deleting the
  // whole segment already lands in the class.
  if (!residual_ok) return std::nullopt;
  Graph h = g.induced(current);
  SegmentPartition segs = p_segments(h, p);
  if (segs.segments.size() <= 1) return std::nullopt;
  for (const auto& seg_local : segs.segments) {
    std::vector<int> seg;
    seg.reserve(seg_local.size());
    for (int v : seg_local) seg.push_back(current[v]);
    auto r = descend_deletion(g, seg, p, recognizer, strict);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> feasible_deletion(const Graph& g, int p,
                                                  const std::function<bool(const Graph&)>& recognizer,
                                                  bool strict_singleton) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  std::vector<int> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return descend_deletion(g, all, p, recognizer, strict_singleton);
}

}  // namespace sse
