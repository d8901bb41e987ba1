#include "sse/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sse {

namespace {

// Bounded draw from the raw engine; uniform_int_distribution is not pinned
// across standard library implementations.
int draw(std::mt19937_64& rng, int bound) { return bound <= 0 ? 0 : static_cast<int>(rng() % bound); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph caterpillar_graph(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("caterpillar needs n >= 1");
  std::mt19937_64 rng(seed);
  int spine = std::max(1, (n + 1) / 2);
  Graph g(n);
  for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  for (int v = spine; v < n; ++v) g.add_edge(v, draw(rng, spine));
  return g;
}

Graph cycle_with_hairs_graph(int n_cycle, int hairs, std::uint64_t seed) {
  if (n_cycle < 3) throw std::invalid_argument("cycle_with_hairs needs cycle length >= 3");
  std::mt19937_64 rng(seed);
  Graph g(n_cycle + hairs);
  for (int i = 0; i < n_cycle; ++i) g.add_edge(i, (i + 1) % n_cycle);
  for (int h = 0; h < hairs; ++h) g.add_edge(n_cycle + h, draw(rng, n_cycle));
  return g;
}

Graph random_degenerate_graph(int n, int eta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_degenerate needs n >= 1");
  if (eta < 1) throw std::invalid_argument("random_degenerate needs eta >= 1");
  std::mt19937_64 rng(seed);
  Graph g(n);
  // Insertion with at most eta back-edges; at least one keeps it connected.
  for (int v = 1; v < n; ++v) {
    int cap = std::min(v, eta);
    int d = 1 + draw(rng, cap);
    std::vector<int> back(v);
    for (int i = 0; i < v; ++i) back[i] = i;
    for (int i = 0; i < d; ++i) {
      int j = i + draw(rng, v - i);
      std::swap(back[i], back[j]);
      g.add_edge(v, back[i]);
    }
  }
  return g;
}

Graph two_blocks_bridge_graph(int block) {
  if (block < 2) throw std::invalid_argument("two_blocks_bridge needs block >= 2");
  Graph g(2 * block);
  for (int u = 0; u < block; ++u) {
    for (int v = u + 1; v < block; ++v) {
      g.add_edge(u, v);
      g.add_edge(block + u, block + v);
    }
  }
  g.add_edge(block - 1, block);
  return g;
}

// Seven-vertex spider: one degree-3 center, three legs of two edges each.
Graph spider_t2_graph() {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(0, 5);
  g.add_edge(5, 6);
  return g;
}

}  // namespace

Graph generate(const std::string& kind, const GenParams& params, std::uint64_t seed) {
  if (kind == "path") return path_graph(params.n);
  if (kind == "cycle") return cycle_graph(params.n);
  if (kind == "complete") return complete_graph(params.n);
  if (kind == "star") return star_graph(params.n);
  if (kind == "caterpillar") return caterpillar_graph(params.n, seed);
  if (kind == "cycle_with_hairs") return cycle_with_hairs_graph(params.n, params.hairs, seed);
  if (kind == "random_degenerate") return random_degenerate_graph(params.n, params.eta, seed);
  if (kind == "two_blocks_bridge") return two_blocks_bridge_graph(params.block);
  if (kind == "spider_T2") return spider_t2_graph();
  throw std::invalid_argument("unknown generator kind: " + kind);
}

Graph random_connected_graph(int n, int density_percent, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, draw(rng, v));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && draw(rng, 100) < density_percent) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace sse
