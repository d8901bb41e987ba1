#ifndef SSE_REPFAM_HPP
#define SSE_REPFAM_HPP

#include <vector>

#include "sse/matroid.hpp"

namespace sse {

/// Family of independent sets of one common size, as sorted column-id lists.
struct SetFamily {
  int member_size = 0;
  std::vector<std::vector<int>> sets;
};

/// X extends Y: disjoint and X union Y independent.
bool extends(const LinearMatroid& m, const std::vector<int>& x, const std::vector<int>& y);
bool extends_elements(const LinearMatroid& m, const std::vector<GroundElement>& x,
                      const std::vector<GroundElement>& y);

/// q-representative subfamily of at most C(s+q, q) members, kept in input
/// order (earliest member wins ties). Requires member_size + q <= rank.
///
/// Members map to vectors of s x s minors over the row subsets of the
/// reduced representation; a greedy basis of those vectors indexes the kept
/// members. Small minor spaces are enumerated colexicographically; larger
/// ones are handled through seeded projections onto random decomposable
/// directions (each coordinate is a single determinant by Cauchy-Binet).
SetFamily reduce_family(const LinearMatroid& m, const SetFamily& fam, int q);

}  // namespace sse

#endif
