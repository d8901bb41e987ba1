#include "sse/repfam.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace sse {

bool extends(const LinearMatroid& m, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> xs = x, ys = y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<int> overlap;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(overlap));
  if (!overlap.empty()) return false;
  std::vector<int> both = xs;
  both.insert(both.end(), ys.begin(), ys.end());
  return m.is_independent_columns(both);
}

bool extends_elements(const LinearMatroid& m, const std::vector<GroundElement>& x,
                      const std::vector<GroundElement>& y) {
  std::vector<int> xc, yc;
  for (const auto& e : x) xc.push_back(m.column_of(e));
  for (const auto& e : y) yc.push_back(m.column_of(e));
  return extends(m, xc, yc);
}

namespace {

constexpr std::uint64_t kReduceSalt = 0x9e3779b97f4a7c15ull;
constexpr long long kExplicitMinorCap = 512;  // colex enumeration up to this dimension

long long binom_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// All k-subsets of 0..n-1 in colexicographic order.
void for_each_colex_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = 0;
    while (i + 1 < k && idx[i] + 1 == idx[i + 1]) ++i;
    if (idx[i] + 1 >= n) break;
    ++idx[i];
    for (int j = 0; j < i; ++j) idx[j] = j;
  }
}

// Greedy basis over the rows of `vectors`: returns indices of members kept.
std::vector<int> greedy_basis(const std::vector<std::vector<std::uint64_t>>& vectors, const PrimeField& f) {
  if (vectors.empty()) return {};
  IncrementalIndep indep(f, static_cast<int>(vectors[0].size()));
  std::vector<int> kept;
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (indep.push(vectors[i])) kept.push_back(static_cast<int>(i));
  }
  return kept;
}

}  // namespace

SetFamily reduce_family(const LinearMatroid& m, const SetFamily& fam, int q) {
  if (q < 0) throw std::invalid_argument("negative extension budget");
  int s = fam.member_size;
  if (s + q > m.rank()) throw std::invalid_argument("member size plus budget exceeds matroid rank");
  SetFamily out;
  out.member_size = s;
  if (fam.sets.empty()) return out;
  for (const auto& mem : fam.sets) {
    if (static_cast<int>(mem.size()) != s) throw std::invalid_argument("family member of wrong size");
  }
  if (s == 0 || q == 0) {
    out.sets.push_back(fam.sets.front());
    return out;
  }

  const PrimeField& f = m.field();
  Matrix rep = row_basis(m.matrix(), f);
  int rank = rep.rows();

  // Shrink the representation to s+q rows: minor vectors then live in the
  // space that gives the C(s+q, q) bound. Seeded deterministically from the
  // input shape so identical inputs reduce identically.
  std::uint64_t seed = kReduceSalt ^ (static_cast<std::uint64_t>(rank) << 40) ^
                       (static_cast<std::uint64_t>(m.ground_size()) << 20) ^
                       (static_cast<std::uint64_t>(s) << 10) ^ static_cast<std::uint64_t>(q);
  int r = std::min(rank, s + q);
  if (rank > s + q) {
    std::mt19937_64 rng(seed);
    Matrix t(r, rank);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < rank; ++j) t.at(i, j) = rng() % f.modulus();
    }
    rep = multiply(t, rep, f);
  }

  int t = static_cast<int>(fam.sets.size());
  std::vector<std::vector<std::vector<std::uint64_t>>> member_cols(t);
  for (int i = 0; i < t; ++i) {
    member_cols[i].reserve(s);
    for (int c : fam.sets[i]) member_cols[i].push_back(rep.column(c));
  }

  std::vector<std::vector<std::uint64_t>> vectors(t);
  long long dim = binom_capped(r, s, kExplicitMinorCap);
  if (dim <= kExplicitMinorCap) {
    // Explicit minor vectors over colex row subsets.
    for (int i = 0; i < t; ++i) vectors[i].reserve(static_cast<size_t>(dim));
    for_each_colex_subset(r, s, [&](const std::vector<int>& rows) {
      for (int i = 0; i < t; ++i) {
        std::vector<std::vector<std::uint64_t>> sub(s, std::vector<std::uint64_t>(s));
        for (int c = 0; c < s; ++c) {
          for (int rr = 0; rr < s; ++rr) sub[c][rr] = member_cols[i][c][rows[rr]];
        }
        vectors[i].push_back(det_columns(sub, f));
      }
    });
    for (int idx : greedy_basis(vectors, f)) out.sets.push_back(fam.sets[idx]);
    return out;
  }

  // Projections onto random decomposable directions: coordinate j of
  // member i is det(X_i^T U_j), the pairing of the two wedge vectors. The
  // span of the member wedges is usually far smaller than the family, so
  // start with few directions and double on saturation. Per direction the
  // whole ground is projected once, so each member pays one s x s
  // determinant over selected rows.
  long long dim_bound = std::min<long long>(t, binom_capped(r, s, t));
  int proj = static_cast<int>(std::min<long long>(dim_bound, 48)) + 8;
  int ground = rep.cols();
  for (int attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed ^ (0xabcddcba12344321ull + attempt));
    for (int i = 0; i < t; ++i) vectors[i].assign(proj, 0);
    std::vector<std::uint64_t> frame(static_cast<size_t>(r) * s);
    std::vector<std::uint64_t> projected(static_cast<size_t>(ground) * s);
    std::vector<std::vector<std::uint64_t>> sub(s, std::vector<std::uint64_t>(s));
    for (int j = 0; j < proj; ++j) {
      for (auto& x : frame) x = rng() % f.modulus();
      // projected[c][b] = <column c, frame column b>
      std::fill(projected.begin(), projected.end(), 0);
      for (int c = 0; c < ground; ++c) {
        for (int rr = 0; rr < r; ++rr) {
          std::uint64_t v = rep.at(rr, c);
          if (v == 0) continue;
          const std::uint64_t* fr = &frame[static_cast<size_t>(rr) * s];
          std::uint64_t* dst = &projected[static_cast<size_t>(c) * s];
          for (int b = 0; b < s; ++b) dst[b] = f.add(dst[b], f.mul(v, fr[b]));
        }
      }
      for (int i = 0; i < t; ++i) {
        for (int a = 0; a < s; ++a) {
          const std::uint64_t* row = &projected[static_cast<size_t>(fam.sets[i][a]) * s];
          for (int b = 0; b < s; ++b) sub[b][a] = row[b];
        }
        vectors[i][j] = det_columns(sub, f);
      }
    }
    std::vector<int> kept = greedy_basis(vectors, f);
    bool saturated = static_cast<int>(kept.size()) + 8 > proj;
    if (!saturated || proj >= dim_bound + 8) {
      for (int idx : kept) out.sets.push_back(fam.sets[idx]);
      return out;
    }
    proj = static_cast<int>(std::min<long long>(2ll * proj, dim_bound)) + 8;
  }
}

}  // namespace sse
