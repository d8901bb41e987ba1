#ifndef SSE_GENERATE_HPP
#define SSE_GENERATE_HPP

#include <cstdint>
#include <string>

#include "sse/graph.hpp"

namespace sse {

struct GenParams {
  int n = 0;       // vertex count (meaning varies per kind)
  int eta = 1;     // degeneracy bound for random_degenerate
  int hairs = 0;   // extra pendant vertices for cycle_with_hairs
  int block = 3;   // block size for two_blocks_bridge
};

/// Deterministic graph generators. Kinds: path, cycle, complete, star,
/// caterpillar, cycle_with_hairs, random_degenerate, two_blocks_bridge,
/// spider_T2.
Graph generate(const std::string& kind, const GenParams& params, std::uint64_t seed = 0);

/// Seeded connected random graph on n vertices (used for test corpora):
/// spanning tree plus each remaining pair independently with density/100.
Graph random_connected_graph(int n, int density_percent, std::uint64_t seed);

}  // namespace sse

#endif
