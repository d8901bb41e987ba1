#include "sse/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace sse {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
  auto e = std::minmax(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>(e.first, e.second)),
                {e.first, e.second});
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::component_of(int v) const {
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{v}, out;
  seen[v] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n_; ++v) {
    if (seen[v]) continue;
    auto comp = component_of(v);
    for (int u : comp) seen[u] = true;
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return static_cast<int>(component_of(0).size()) == n_;
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* map_out) const {
  std::vector<int> vs = verts;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::map<int, int> to_new;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= n_) throw std::invalid_argument("induced vertex out of range");
    to_new[vs[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(vs.size()));
  for (const auto& [u, v] : edges_) {
    auto iu = to_new.find(u), iv = to_new.find(v);
    if (iu != to_new.end() && iv != to_new.end()) h.add_edge(iu->second, iv->second);
  }
  if (map_out) *map_out = vs;
  return h;
}

int max_back_degree(const Graph& g, const std::vector<int>& seq) {
  std::vector<bool> earlier(g.num_vertices(), false);
  int best = 0;
  for (int v : seq) {
    int d = 0;
    for (int u : g.neighbors(v)) {
      if (earlier[u]) ++d;
    }
    best = std::max(best, d);
    earlier[v] = true;
  }
  return best;
}

Ordering degeneracy_ordering(const Graph& g, const std::vector<int>& excluded) {
  int n = g.num_vertices();
  std::vector<bool> gone(n, false);
  for (int v : excluded) {
    if (v < 0 || v >= n) throw std::invalid_argument("excluded vertex out of range");
    gone[v] = true;
  }
  std::vector<int> deg(n, 0);
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ++remaining;
    for (int u : g.neighbors(v)) {
      if (!gone[u]) ++deg[v];
    }
  }
  std::vector<int> peel;
  peel.reserve(remaining);
  int degeneracy = 0;
  for (int step = 0; step < remaining; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (best < 0 || deg[v] < deg[best]) best = v;
    }
    degeneracy = std::max(degeneracy, deg[best]);
    gone[best] = true;
    peel.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!gone[u]) --deg[u];
    }
  }
  std::reverse(peel.begin(), peel.end());
  return Ordering{std::move(peel), degeneracy};
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

Ordering ordering_from_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  if (nb == 0) throw std::invalid_argument("invalid tree decomposition: no bags");
  if (td.n != g.num_vertices()) throw std::invalid_argument("invalid tree decomposition: vertex count mismatch");
  std::vector<std::vector<int>> bag_adj(nb);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= nb || b < 0 || b >= nb) throw std::invalid_argument("invalid tree decomposition: bad tree edge");
    bag_adj[a].push_back(b);
    bag_adj[b].push_back(a);
  }
  // The bag graph must be a tree.
  if (static_cast<int>(td.tree_edges.size()) != nb - 1)
    throw std::invalid_argument("invalid tree decomposition: bag graph is not a tree");
  {
    std::vector<bool> seen(nb, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++cnt;
      for (int c : bag_adj[b]) {
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    if (cnt != nb) throw std::invalid_argument("invalid tree decomposition: bag graph is not a tree");
  }
  // Axiom: every vertex in some bag.
  std::vector<bool> covered(g.num_vertices(), false);
  for (const auto& bag : td.bags) {
    for (int v : bag) {
      if (v < 0 || v >= g.num_vertices())
        throw std::invalid_argument("invalid tree decomposition: bag vertex out of range");
      covered[v] = true;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!covered[v]) throw std::invalid_argument("invalid tree decomposition: vertex not covered by any bag");
  }
  // Axiom: every edge inside some bag.
  for (const auto& [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& bag : td.bags) {
      bool hu = false, hv = false;
      for (int x : bag) {
        hu |= x == u;
        hv |= x == v;
      }
      if (hu && hv) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument("invalid tree decomposition: edge not covered by any bag");
  }
  // Axiom: bags containing a vertex form a connected subtree.
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> holding;
    for (int b = 0; b < nb; ++b) {
      if (std::find(td.bags[b].begin(), td.bags[b].end(), v) != td.bags[b].end()) holding.push_back(b);
    }
    std::set<int> want(holding.begin(), holding.end());
    std::vector<int> stack{holding[0]};
    std::set<int> seen{holding[0]};
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : bag_adj[b]) {
        if (want.count(c) && !seen.count(c)) {
          seen.insert(c);
          stack.push_back(c);
        }
      }
    }
    if (seen.size() != want.size())
      throw std::invalid_argument("invalid tree decomposition: bags of a vertex are not connected");
  }
  // Pre-order from bag 0, children in ascending id order.
  std::vector<int> seq;
  std::vector<bool> emitted(g.num_vertices(), false), visited(nb, false);
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    std::vector<int> bag = td.bags[b];
    std::sort(bag.begin(), bag.end());
    for (int v : bag) {
      if (!emitted[v]) {
        emitted[v] = true;
        seq.push_back(v);
      }
    }
    std::vector<int> kids;
    for (int c : bag_adj[b]) {
      if (!visited[c]) kids.push_back(c);
    }
    std::sort(kids.begin(), kids.end(), std::greater<int>());
    for (int c : kids) {
      visited[c] = true;
      stack.push_back(c);
    }
  }
  Ordering out;
  out.sequence = std::move(seq);
  out.claimed_degeneracy = max_back_degree(g, out.sequence);
  return out;
}

int cutwidth_of_layout(const Graph& g, const std::vector<int>& layout) {
  std::vector<int> pos(g.num_vertices());
  for (size_t i = 0; i < layout.size(); ++i) pos[layout[i]] = static_cast<int>(i);
  int width = 0;
  for (int i = 0; i + 1 < g.num_vertices(); ++i) {
    int cut = 0;
    for (const auto& [u, v] : g.edges()) {
      if (std::min(pos[u], pos[v]) <= i && std::max(pos[u], pos[v]) > i) ++cut;
    }
    width = std::max(width, cut);
  }
  return width;
}

Ordering ordering_from_cutwidth_layout(const Graph& g, const std::vector<int>& layout) {
  if (static_cast<int>(layout.size()) != g.num_vertices())
    throw std::invalid_argument("layout is not a permutation of the vertices");
  std::vector<bool> seen(g.num_vertices(), false);
  for (int v : layout) {
    if (v < 0 || v >= g.num_vertices() || seen[v])
      throw std::invalid_argument("layout is not a permutation of the vertices");
    seen[v] = true;
  }
  return Ordering{layout, cutwidth_of_layout(g, layout)};
}

int EquivalentDigraph::arc_id(int tail, int head) const {
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].first == tail && arcs[i].second == head) return static_cast<int>(i);
  }
  return -1;
}

EquivalentDigraph equivalent_digraph(const Graph& g, int root) {
  if (root < 0 || root >= g.num_vertices()) throw std::invalid_argument("root out of range");
  EquivalentDigraph d;
  d.base = g;
  d.root = root;
  d.arcs.reserve(2 * g.num_edges());
  for (const auto& [u, v] : g.edges()) {
    d.arcs.emplace_back(u, v);
    d.arcs.emplace_back(v, u);
  }
  return d;
}

}  // namespace sse
