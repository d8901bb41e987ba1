#include "sse/sse_dp.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "sse/connectivity.hpp"
#include "sse/repfam.hpp"

namespace sse {

std::vector<std::vector<int>> back_neighbor_sets(const Graph& g, const std::vector<int>& x,
                                                 const Ordering& ordering) {
  std::vector<bool> is_x(g.num_vertices(), false);
  for (int v : x) is_x[v] = true;
  std::vector<int> pos(g.num_vertices(), 0);
  for (size_t i = 0; i < ordering.sequence.size(); ++i) pos[ordering.sequence[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> out(ordering.sequence.size() + 1);
  for (size_t i = 0; i < ordering.sequence.size(); ++i) {
    int v = ordering.sequence[i];
    for (int u : g.neighbors(v)) {
      if (!is_x[u] && pos[u] != 0 && pos[u] < static_cast<int>(i) + 1) out[i + 1].push_back(u);
    }
    std::sort(out[i + 1].begin(), out[i + 1].end());
  }
  return out;
}

namespace {

std::uint64_t mask_of(const std::vector<int>& verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= 1ull << v;
  return m;
}

std::uint64_t hash_elems(const std::vector<int>& elems) {
  std::uint64_t h = 1469598103934665603ull;
  for (int e : elems) {
    h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

SseDpEngine::SseDpEngine(const Graph& g, std::vector<int> x, Ordering ordering, const SseMatroid& matroid,
                         const DpGuard& guard, DpRunConfig cfg)
    : g_(g), x_(std::move(x)), ordering_(std::move(ordering)), matroid_(matroid), guard_(guard), cfg_(cfg) {
  if (g_.num_vertices() > 62) throw std::runtime_error("vertex cap exceeded for the table solver");
  std::sort(x_.begin(), x_.end());
  x_.erase(std::unique(x_.begin(), x_.end()), x_.end());
  if (x_.empty()) throw std::invalid_argument("the table solver needs a nonempty terminal set");
  x_mask_ = mask_of(x_);
  n_positions_ = static_cast<int>(ordering_.sequence.size());
  if (n_positions_ + static_cast<int>(x_.size()) != g_.num_vertices())
    throw std::invalid_argument("ordering must cover exactly the non-terminal vertices");
  vertex_at_.assign(n_positions_ + 1, -1);
  pos_of_.assign(g_.num_vertices(), 0);
  for (int i = 0; i < n_positions_; ++i) {
    int v = ordering_.sequence[i];
    if (v < 0 || v >= g_.num_vertices() || pos_of_[v] != 0 || (x_mask_ >> v) & 1)
      throw std::invalid_argument("ordering must cover exactly the non-terminal vertices");
    vertex_at_[i + 1] = v;
    pos_of_[v] = i + 1;
  }
  back_mask_.assign(n_positions_ + 1, 0);
  for (int j = 1; j <= n_positions_; ++j) {
    int v = vertex_at_[j];
    for (int u : g_.neighbors(v)) {
      if (((x_mask_ >> u) & 1) == 0 && pos_of_[u] != 0 && pos_of_[u] < j) back_mask_[j] |= 1ull << u;
    }
  }
  const Matrix& mat = matroid_.matroid.matrix();
  columns_.resize(mat.cols());
  for (int c = 0; c < mat.cols(); ++c) columns_[c] = mat.column(c);
  for (int a = 0; a < matroid_.digraph.num_arcs(); ++a) arc_id_[matroid_.digraph.arcs[a]] = a;

  target_chosen_ = cfg_.k - static_cast<int>(x_.size());
  target_elems_ = 3 * cfg_.p * (cfg_.k - 1);
  if (target_chosen_ < 0) throw std::invalid_argument("the table solver needs k >= |x|");
  for (int j = 1; j <= n_positions_; ++j) {
    int x_deg = 0;
    for (int u : g_.neighbors(vertex_at_[j])) {
      if ((x_mask_ >> u) & 1) ++x_deg;
    }
    int d = 2 * (x_deg + __builtin_popcountll(back_mask_[j]));
    if (d > cfg_.cap_arc_degree)
      throw std::runtime_error("incident-arc cap exceeded; raise --cap-arc-degree");
  }
}

std::vector<int> SseDpEngine::vertices_of(const DpMember& member) const {
  std::set<int> verts;
  for (int c : member.elems) {
    int arc = matroid_.matroid.element(c).arc;
    verts.insert(matroid_.digraph.arcs[arc].first);
    verts.insert(matroid_.digraph.arcs[arc].second);
  }
  return {verts.begin(), verts.end()};
}

std::vector<DpMember> SseDpEngine::reduced(std::vector<DpMember>&& fam, int num_elements) const {
  int budget = target_elems_ - num_elements;
  if (fam.size() <= 1 || budget <= 0) {
    if (fam.size() > 1) fam.resize(1);  // zero budget keeps a single member
    return std::move(fam);
  }
  SetFamily in;
  in.member_size = num_elements;
  in.sets.reserve(fam.size());
  for (const auto& m : fam) in.sets.push_back(m.elems);
  SetFamily kept = reduce_family(matroid_.matroid, in, budget);
  std::vector<DpMember> out;
  out.reserve(kept.sets.size());
  size_t cursor = 0;
  for (const auto& s : kept.sets) {
    while (cursor < fam.size() && fam[cursor].elems != s) ++cursor;
    if (cursor == fam.size()) break;  // kept sets appear in input order
    out.push_back(fam[cursor]);
    ++cursor;
  }
  return out;
}

bool SseDpEngine::try_accept_final(const DpMember& member, int state, int last_pos) {
  if (!guard_.accept_final(state, last_pos)) return false;
  std::vector<int> verts = vertices_of(member);
  if (static_cast<int>(verts.size()) != cfg_.k) return false;
  for (int t : x_) {
    if (!std::binary_search(verts.begin(), verts.end(), t)) return false;
  }
  // Guards against an unlucky truncation draw: accept only verified sets.
  if (!is_p_edge_connected(g_, verts, cfg_.p, false)) return false;
  found_ = verts;
  return true;
}

int SseDpEngine::max_branch_label(const DpMember& mem) const {
  int label = 0;
  for (int c : mem.elems) {
    int layer = matroid_.matroid.element(c).layer;
    if (layer <= 2 * cfg_.p) label = std::max(label, (layer + 1) / 2);
  }
  return label;
}

void SseDpEngine::build_base() {
  base_.clear();
  base_.push_back({DpMember{{}, 0}});
  std::vector<int> x_arcs;
  for (int a = 0; a < matroid_.digraph.num_arcs(); ++a) {
    auto [t, h] = matroid_.digraph.arcs[a];
    if (h == matroid_.digraph.root) continue;  // loop in the out-partition block
    if (((x_mask_ >> t) & 1) && ((x_mask_ >> h) & 1)) x_arcs.push_back(a);
  }
  for (int count = 1; 3 * count <= target_elems_; ++count) {
    const auto& prev = base_[count - 1];
    if (prev.empty()) break;
    std::vector<DpMember> next;
    std::set<std::vector<int>> seen;
    for (const auto& mem : prev) {
      // Branching labels grow canonically: sets that only permute the
      // branching indices are interchangeable, so one labeling suffices.
      int label_cap = std::min(cfg_.p, max_branch_label(mem) + 1);
      for (int a : x_arcs) {
        for (int h = 1; h <= label_cap; ++h) {
          const ArcTriple& tr = matroid_.triple(a, h);
          std::vector<int> elems = mem.elems;
          bool dup = false;
          for (int c : tr.columns) {
            if (std::binary_search(elems.begin(), elems.end(), c)) dup = true;
          }
          if (dup) continue;
          elems.insert(elems.end(), tr.columns.begin(), tr.columns.end());
          std::sort(elems.begin(), elems.end());
          if (!matroid_.matroid.is_independent_columns(elems)) continue;
          if (!seen.insert(elems).second) continue;
          next.push_back(DpMember{std::move(elems), 0});
        }
      }
    }
    base_.push_back(reduced(std::move(next), 3 * count));
    if (base_.back().empty()) break;
  }
}

void SseDpEngine::process_target(int tgt_pos) {
  // Candidates are binned straight into their final slots; each bin is
  // shrunk in flight so no slot accumulates an unbounded raw family
  // (shrinking a shrunk family stays representative).
  struct Cell {
    std::vector<DpMember> kept;
    std::vector<DpMember> pending;
    std::set<std::uint64_t> seen;
  };
  std::map<DpSlot, Cell, SlotOrder> cells;
  constexpr size_t kFlushAt = 192;
  auto flush_cell = [&](const DpSlot& key, Cell& cell) {
    if (cell.pending.empty()) return;
    std::vector<DpMember> all = std::move(cell.kept);
    for (auto& m : cell.pending) all.push_back(std::move(m));
    cell.pending.clear();
    cell.kept = reduced(std::move(all), key.num_elements);
  };

  int v = vertex_at_[tgt_pos];
  std::uint64_t amask = back_mask_[tgt_pos];
  std::vector<int> x_nbrs;
  for (int u : g_.neighbors(v)) {
    if ((x_mask_ >> u) & 1) x_nbrs.push_back(u);
  }

  const int dim = matroid_.matroid.matrix().rows();
  IncrementalIndep indep(matroid_.matroid.field(), dim);

  auto expand = [&](int src_pos, int src_state, std::uint64_t src_zmask, const DpMember& mem, int src_chosen,
                    int src_elems) {
    if (src_chosen + 1 > target_chosen_) return;
    // Y ranges over supersets of the source's committed intersection.
    std::uint64_t free = amask & ~src_zmask;
    std::vector<std::uint64_t> subs;
    for (std::uint64_t sub = 0;; sub = (sub - free) & free) {
      subs.push_back(sub);
      if (sub == free) break;
    }
    std::sort(subs.begin(), subs.end());
    for (std::uint64_t entering : subs) {
      int num_new = 1 + __builtin_popcountll(entering);
      int tgt_chosen = src_chosen + num_new;
      if (tgt_chosen > target_chosen_) continue;
      auto next_state = guard_.transition(src_state, src_pos, tgt_pos, entering);
      if (!next_state) continue;
      std::uint64_t ymask = src_zmask | entering;

      std::vector<ArcItem> items;
      int root = matroid_.digraph.root;
      for (int u : x_nbrs) {
        items.push_back({arc_id_.at({u, v}), u});
        if (u != root) items.push_back({arc_id_.at({v, u}), u});  // arcs into the root are loops
      }
      for (int u = 0; u < g_.num_vertices(); ++u) {
        if ((ymask >> u) & 1) {
          items.push_back({arc_id_.at({u, v}), u});
          items.push_back({arc_id_.at({v, u}), u});
        }
      }
      // Suffix reach: which entering vertices the remaining items can touch.
      std::vector<std::uint64_t> suffix_touch(items.size() + 1, 0);
      for (int i = static_cast<int>(items.size()) - 1; i >= 0; --i) {
        suffix_touch[i] = suffix_touch[i + 1] | (1ull << items[i].other);
      }

      indep.clear();
      for (int c : mem.elems) {
        if (!indep.push(columns_[c])) throw std::runtime_error("stored set is not independent");
      }

      std::vector<int> fcols;
      int num_arcs = 0;
      std::uint64_t touched = 0;
      int max_label = max_branch_label(mem);
      auto emit = [&]() {
        int tgt_elems = src_elems + 3 * num_arcs;
        bool final_slot = tgt_chosen == target_chosen_ && tgt_elems == target_elems_;
        if (tgt_chosen == target_chosen_ && !final_slot) return;
        if (tgt_elems >= target_elems_ && !final_slot) return;
        std::vector<int> elems = mem.elems;
        elems.insert(elems.end(), fcols.begin(), fcols.end());
        std::sort(elems.begin(), elems.end());
        DpMember cand{std::move(elems), mem.chosen_mask | entering | (1ull << v)};
        if (final_slot) {
          if (!found_) try_accept_final(cand, *next_state, tgt_pos);
          if (cfg_.exhaustive) {
            DpSlot slot{tgt_chosen, tgt_pos, tgt_elems, ymask, 0, n_positions_ + 1, *next_state};
            table_[slot].push_back(std::move(cand));
          }
          return;
        }
        std::uint64_t cand_hash = hash_elems(cand.elems);
        for (int next = tgt_pos + 1; next <= n_positions_; ++next) {
          DpSlot key{tgt_chosen, tgt_pos, tgt_elems, ymask, cand.chosen_mask & back_mask_[next], next,
                     *next_state};
          Cell& cell = cells[key];
          if (!cell.seen.insert(cand_hash).second) continue;
          cell.pending.push_back(cand);
          // Amortized: each flush at most doubles the kept family.
          if (cell.pending.size() >= kFlushAt + cell.kept.size()) flush_cell(key, cell);
        }
      };

      auto recurse = [&](auto&& self, size_t idx) -> void {
        if (found_ && !cfg_.exhaustive) return;
        std::uint64_t missing = entering & ~touched;
        if ((missing & ~suffix_touch[idx]) != 0) return;
        if (tgt_chosen == target_chosen_ &&
            src_elems + 3 * (num_arcs + static_cast<int>(items.size() - idx)) < target_elems_)
          return;
        if (idx == items.size()) {
          if (num_arcs > 0 && missing == 0) emit();
          return;
        }
        self(self, idx + 1);  // skip this arc
        if (src_elems + 3 * (num_arcs + 1) > target_elems_) return;
        const ArcItem& item = items[idx];
        // Branching labels grow canonically (see build_base).
        int label_cap = std::min(cfg_.p, max_label + 1);
        for (int h = 1; h <= label_cap; ++h) {
          const ArcTriple& tr = matroid_.triple(item.arc, h);
          int pushed = 0;
          bool ok = true;
          for (int c : tr.columns) {
            if (indep.push(columns_[c])) {
              ++pushed;
            } else {
              ok = false;
              break;
            }
          }
          if (!ok) {
            indep.pop(pushed);
            continue;
          }
          fcols.insert(fcols.end(), tr.columns.begin(), tr.columns.end());
          ++num_arcs;
          std::uint64_t saved = touched;
          int saved_label = max_label;
          touched |= (1ull << item.other) & entering;
          max_label = std::max(max_label, h);
          self(self, idx + 1);
          touched = saved;
          max_label = saved_label;
          --num_arcs;
          fcols.resize(fcols.size() - 3);
          indep.pop(3);
        }
      };
      recurse(recurse, 0);
      if (found_ && !cfg_.exhaustive) return;
    }
  };

  // Base families act as sources at every position (their committed
  // intersection with any back-neighborhood is empty).
  for (size_t cnt = 0; cnt < base_.size(); ++cnt) {
    for (const auto& mem : base_[cnt]) {
      expand(0, guard_.base_state(), 0, mem, 0, static_cast<int>(3 * cnt));
      if (found_ && !cfg_.exhaustive) return;
    }
  }
  DpSlot lo{0, 0, 0, 0, 0, tgt_pos, std::numeric_limits<int>::min()};
  lo.next_pos = tgt_pos;
  for (auto it = table_.lower_bound(lo); it != table_.end() && it->first.next_pos == tgt_pos; ++it) {
    const DpSlot& slot = it->first;
    for (const auto& mem : it->second) {
      expand(slot.last_pos, slot.state, slot.next_back_mask, mem, slot.num_chosen, slot.num_elements);
      if (found_ && !cfg_.exhaustive) return;
    }
  }

  for (auto& [key, cell] : cells) {
    flush_cell(key, cell);
    if (!cell.kept.empty()) table_[key] = std::move(cell.kept);
  }
}

std::optional<std::vector<int>> SseDpEngine::run() {
  build_base();
  if (target_chosen_ == 0) {
    // Degenerate call: the answer is decided by the base families alone.
    size_t want = static_cast<size_t>(target_elems_ / 3);
    if (base_.size() > want && !base_[want].empty()) {
      (void)try_accept_final(base_[want].front(), guard_.base_state(), 0);
    }
    return found_;
  }
  for (int j = 1; j <= n_positions_; ++j) {
    process_target(j);
    if (found_ && !cfg_.exhaustive) break;
  }
  return found_;
}

std::vector<int> p_core(const Graph& g, int p) {
  std::vector<bool> gone(g.num_vertices(), false);
  std::vector<int> deg(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!gone[v] && deg[v] < p) {
        gone[v] = true;
        changed = true;
        for (int u : g.neighbors(v)) {
          if (!gone[u]) --deg[u];
        }
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) out.push_back(v);
  }
  return out;
}

PrimeField default_field(const Graph& g) {
  std::uint64_t n = g.num_vertices();
  std::uint64_t need = std::max<std::uint64_t>({n * n, 2 * static_cast<std::uint64_t>(g.num_edges()), 1000000});
  return PrimeField(PrimeField::next_prime(need));
}

std::string check_sse_solution(const Graph& g, const std::vector<int>& x, int k, int p,
                               const std::vector<int>& sol, bool strict_singleton) {
  std::vector<int> s = sol;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= g.num_vertices()) return "vertex out of range";
  }
  for (int t : x) {
    if (!std::binary_search(s.begin(), s.end(), t)) return "terminal not covered";
  }
  if (static_cast<int>(s.size()) > k) return "budget";
  if (!is_p_edge_connected(g, s, p, strict_singleton)) return "connectivity";
  return "";
}

namespace {

// Exact-size search for solutions with at least two vertices.
std::optional<std::pair<std::vector<int>, int>> search_extension(const Graph& g, const std::vector<int>& x,
                                                                 int k, int p, const SseOptions& opt) {
  std::vector<int> core = p_core(g, p);
  std::uint64_t core_mask = mask_of(core);
  for (int t : x) {
    if (((core_mask >> t) & 1) == 0) return std::nullopt;
  }
  Graph core_graph = g.induced(core);
  // All of S lives in one component of the core around the terminals.
  std::vector<int> comp_local = core_graph.component_of(
      static_cast<int>(std::lower_bound(core.begin(), core.end(), x.front()) - core.begin()));
  std::vector<int> comp;
  comp.reserve(comp_local.size());
  for (int lv : comp_local) comp.push_back(core[lv]);
  std::uint64_t comp_mask = mask_of(comp);
  for (int t : x) {
    if (((comp_mask >> t) & 1) == 0) return std::nullopt;
  }
  std::vector<int> to_orig;
  Graph h = g.induced(comp, &to_orig);
  std::vector<int> hx;
  for (int t : x) hx.push_back(static_cast<int>(std::lower_bound(to_orig.begin(), to_orig.end(), t) - to_orig.begin()));
  std::sort(hx.begin(), hx.end());

  Ordering ord;
  if (opt.ordering) {
    for (int v : opt.ordering->sequence) {
      if (std::binary_search(x.begin(), x.end(), v)) continue;
      auto it = std::lower_bound(to_orig.begin(), to_orig.end(), v);
      if (it != to_orig.end() && *it == v) ord.sequence.push_back(static_cast<int>(it - to_orig.begin()));
    }
    ord.claimed_degeneracy = opt.ordering->claimed_degeneracy;
  } else {
    ord = degeneracy_ordering(h, hx);
  }

  PrimeField field = opt.field_prime ? PrimeField(opt.field_prime) : default_field(h);
  int root = hx.front();
  int lo = std::max(static_cast<int>(hx.size()), 2);
  for (int kk = lo; kk <= std::min(k, h.num_vertices()); ++kk) {
    if (kk == static_cast<int>(hx.size())) continue;  // S = x was checked by the caller
    if (sse_matroid_rank_bound(h, root, kk, p) < 3 * p * (kk - 1)) continue;
    SseMatroid m = build_sse_matroid(h, root, kk, p, field, opt.seed);
    DpGuard guard;
    DpRunConfig cfg;
    cfg.k = kk;
    cfg.p = p;
    cfg.cap_arc_degree = opt.cap_arc_degree;
    SseDpEngine engine(h, hx, ord, m, guard, cfg);
    auto sol = engine.run();
    if (sol) {
      std::vector<int> orig;
      orig.reserve(sol->size());
      for (int v : *sol) orig.push_back(to_orig[v]);
      std::sort(orig.begin(), orig.end());
      return std::make_pair(orig, 3 * p * (kk - 1));
    }
  }
  return std::nullopt;
}

}  // namespace

SseResult solve_extension(const Graph& g, const std::vector<int>& x, int k, int p, const SseOptions& opt) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  if (g.num_vertices() > opt.cap_vertices || g.num_vertices() > 62)
    throw std::runtime_error("vertex cap exceeded");
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int v : xs) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("terminal out of range");
  }
  SseResult no;
  if (static_cast<int>(xs.size()) > k || k <= 0 || g.num_vertices() == 0) return no;

  auto singleton_fallback = [&]() -> SseResult {
    if (opt.strict_singleton || xs.size() > 1) return no;
    SseResult r;
    r.yes = true;
    r.solution = xs.empty() ? std::vector<int>{0} : xs;
    return r;
  };

  if (k == 1) return singleton_fallback();

  if (xs.size() >= 2 && is_p_edge_connected(g, xs, p, opt.strict_singleton)) {
    SseResult r;
    r.yes = true;
    r.solution = xs;
    return r;
  }

  if (!xs.empty()) {
    if (auto found = search_extension(g, xs, k, p, opt)) {
      SseResult r;
      r.yes = true;
      r.solution = found->first;
      r.certificate_size = found->second;
      return r;
    }
    return singleton_fallback();
  }

  // No terminals: anchor the search at every possible start vertex.
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (auto found = search_extension(g, {u}, k, p, opt)) {
      SseResult r;
      r.yes = true;
      r.solution = found->first;
      r.certificate_size = found->second;
      return r;
    }
  }
  return singleton_fallback();
}

}  // namespace sse
