#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pclist/linked_lists.hpp"
#include "pclist/matching.hpp"
#include "pclist/merge_scan.hpp"
#include "pclist/pclist.hpp"

// Hopcroft-Karp maximum bipartite matching with O(n + m_tilde) phases. Each
// phase is one BFS* (level partition of the alternating-level graph) plus one
// DFS* (maximal set of vertex-disjoint shortest augmenting paths) plus an
// O(n) augmentation.
namespace pclist {

/// Out-mode pc-list over a bipartition where switching complements a list
/// only across the owner's partition class: a switched vertex stores its
/// cross-side non-neighbors.
struct BipartitePCList {
  PCList pc;
  std::vector<std::uint8_t> side;  // 0 = A, 1 = B
  int a_count = 0, b_count = 0;

  int vertex_count() const { return pc.vertex_count(); }

  /// Side-aware decode: a switched vertex's list complements only across its
  /// partition class, so same-side pairs never carry arcs.
  Graph represented_graph() const {
    const int n = pc.vertex_count();
    Graph g(n, true);
    std::vector<std::uint8_t> row(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      std::fill(row.begin(), row.end(), 0);
      for (VertexId u : pc.list_values(v)) row[u] = 1;
      for (VertexId u = 0; u < n; ++u) {
        if (u == v || side[u] == side[v]) continue;
        if (pc.switched(v) ? !row[u] : row[u] != 0) g.add_edge(v, u);
      }
    }
    g.finalize();
    return g;
  }

  static BipartitePCList build(const Graph& g, std::vector<std::uint8_t> side) {
    const int n = g.vertex_count();
    if (static_cast<int>(side.size()) != n)
      throw std::invalid_argument("BipartitePCList: side size mismatch");
    BipartitePCList bp;
    bp.side = std::move(side);
    for (int v = 0; v < n; ++v) (bp.side[v] ? bp.b_count : bp.a_count)++;

    std::vector<std::vector<VertexId>> lists(n);
    std::vector<std::uint8_t> switched(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      const int other = bp.side[v] ? bp.a_count : bp.b_count;
      const auto& adj = g.out_neighbors(v);
      for (VertexId u : adj)
        if (bp.side[u] == bp.side[v])
          throw std::invalid_argument("BipartitePCList: edge inside one side");
      if (2 * g.out_degree(v) > other) {
        switched[v] = 1;
        std::size_t i = 0;
        for (VertexId u = 0; u < n; ++u) {
          if (i < adj.size() && adj[i] == u) {
            ++i;
            continue;
          }
          if (bp.side[u] != bp.side[v]) lists[v].push_back(u);
        }
      } else {
        lists[v] = adj;
      }
    }
    bp.pc = PCList::from_parts(std::move(lists), std::move(switched));
    return bp;
  }

  /// Infers the bipartition by 2-coloring each component (smallest vertex
  /// colored A). Throws on odd cycles or non-symmetric input.
  static BipartitePCList build(const Graph& g) {
    if (!g.is_symmetric())
      throw std::invalid_argument("BipartitePCList: input graph must be symmetric");
    const int n = g.vertex_count();
    std::vector<std::uint8_t> side(n, 0);
    std::vector<int> color(n, -1);
    std::vector<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
      if (color[root] != -1) continue;
      color[root] = 0;
      queue.assign(1, root);
      std::size_t head = 0;
      while (head < queue.size()) {
        VertexId v = queue[head++];
        for (VertexId u : g.out_neighbors(v)) {
          if (color[u] == -1) {
            color[u] = color[v] ^ 1;
            queue.push_back(u);
          } else if (color[u] == color[v]) {
            throw std::invalid_argument("BipartitePCList: graph is not bipartite");
          }
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(color[v]);
    return build(g, std::move(side));
  }
};

/// The implicit level DAG: per-level doubly-linked vertex lists plus the
/// cutoff k, the level of the first unmatched B vertex. k < 0 means no
/// augmenting path exists.
struct LevelPartition {
  VertexListFamily levels;
  std::vector<int> level_of;  // -1 undiscovered
  int k = -1;

  bool empty() const { return k < 0; }
};

/// Alternating-level BFS from the virtual source: level 1 holds the
/// unmatched A vertices, A->B steps use pc-list edges, B->A steps follow
/// mate pointers. Stops once every vertex at level k has been dequeued.
/// Non-destructive on the pc-list.
inline LevelPartition bfs_star(BipartitePCList& bp, const Matching& m) {
  PCList& p = bp.pc;
  WorkLedger& lg = p.ledger();
  const int n = p.vertex_count();

  LevelPartition out;
  out.levels.init(n, n + 2);
  out.level_of.assign(n, -1);

  OrderedVertexList u_side[2];
  u_side[0].init_empty(n);
  u_side[1].init_empty(n);
  for (VertexId v = 0; v < n; ++v) u_side[bp.side[v]].push_back(v);

  std::vector<VertexId> queue;
  std::size_t qhead = 0;
  auto discover = [&](VertexId v, int level) {
    u_side[bp.side[v]].remove(v);
    out.level_of[v] = level;
    out.levels.push_back(level, v);
    queue.push_back(v);
    lg.charge(Charge::vertex);
    lg.charge(Charge::queue_op);
  };

  for (VertexId v = 0; v < n; ++v)
    if (!bp.side[v] && !m.matched(v)) discover(v, 1);

  while (qhead < queue.size()) {
    VertexId v = queue[qhead++];
    lg.charge(Charge::queue_op);
    int level = out.level_of[v];
    if (out.k >= 0 && level > out.k) break;
    if (bp.side[v]) {
      if (!m.matched(v)) {
        if (out.k < 0) out.k = level;
        continue;
      }
      VertexId w = m.mate[v];
      lg.charge(Charge::misc);  // mate lookup
      if (u_side[0].contains(w)) discover(w, level + 1);
      continue;
    }
    // A-side: enumerate undiscovered cross neighbors through the pc-list.
    OrderedVertexList& u = u_side[1];
    if (!p.switched(v)) {
      for (auto s = p.list_first(v); s != kNullSlot; s = p.list_next(s)) {
        lg.charge(Charge::pclist_element);
        VertexId t = p.slot_value(s);
        if (u.contains(t)) discover(t, level + 1);
      }
    } else {
      for (auto s = p.list_first(v); s != kNullSlot; s = p.list_next(s)) {
        lg.charge(Charge::pclist_element);
        VertexId t = p.slot_value(s);
        if (u.contains(t)) u.mark(t);
      }
      VertexId w = u.head();
      while (w != OrderedVertexList::kNull) {
        VertexId next = u.next(w);
        if (u.marked(w)) {
          u.unmark(w);
          lg.charge(Charge::pclist_element);
        } else {
          discover(w, level + 1);
        }
        w = next;
      }
    }
  }

  if (out.k < 0) {
    out.levels.init(n, n + 2);
    out.level_of.assign(n, -1);
    return out;
  }
  // Drop stragglers past the cutoff; shortest augmenting paths end at k.
  VertexId w = out.levels.head(out.k + 1);
  while (w != VertexListFamily::kNull) {
    VertexId next = out.levels.next(w);
    out.levels.remove(w);
    out.level_of[w] = -1;
    lg.charge(Charge::misc);
    w = next;
  }
  return out;
}

/// Rebuilds every level list in ascending vertex order (the DFS* scans
/// require pc-list ordering). One O(n) counting pass.
inline void radix_sort_levels(BipartitePCList& bp, LevelPartition& l) {
  const int n = bp.pc.vertex_count();
  l.levels.init(n, n + 2);
  for (VertexId v = 0; v < n; ++v) {
    if (l.level_of[v] >= 0) l.levels.push_back(l.level_of[v], v);
    bp.pc.ledger().charge(Charge::misc);
  }
}

namespace detail {

struct DfsStarState {
  BipartitePCList& bp;
  LevelPartition& l;
  const Matching& m;
  std::vector<VertexId> path;
  std::vector<std::vector<VertexId>>* found = nullptr;
};

// Returns true when an augmenting path was completed (unwind to the root).
inline bool dfs_star_visit(DfsStarState& st, VertexId v) {
  PCList& p = st.bp.pc;
  WorkLedger& lg = p.ledger();
  st.path.push_back(v);
  lg.charge(Charge::queue_op);
  const int level = st.l.level_of[v];
  st.l.levels.remove(v);
  st.l.level_of[v] = -1;

  if (st.bp.side[v]) {
    if (!st.m.matched(v)) {
      st.found->push_back(st.path);
      st.path.pop_back();
      return true;
    }
    VertexId w = st.m.mate[v];
    lg.charge(Charge::misc);
    bool hit = st.l.level_of[w] == level + 1 && dfs_star_visit(st, w);
    st.path.pop_back();
    return hit;
  }

  bool hit = false;
  if (!p.switched(v)) {
    std::int32_t s = p.list_first(v);
    while (s != kNullSlot && !hit) {
      lg.charge(Charge::pclist_element);
      VertexId t = p.slot_value(s);
      s = p.list_next(s);
      if (st.l.level_of[t] == level + 1) hit = dfs_star_visit(st, t);
    }
  } else {
    struct LevelView {
      VertexListFamily& fam;
      int level;
      VertexId next(VertexId v) const { return fam.next(v); }
      bool contains(VertexId v) const { return fam.list_of(v) == level; }
    } view{st.l.levels, level + 1};
    auto u_start = [&] { return st.l.levels.head(level + 1); };
    hit = !complemented_merge_scan(
        p, v, 0, p.vertex_count(), p.list_first(v), view, u_start,
        [&](VertexId t) {
          // on_child must consume t; recursion removes it on entry.
          return !dfs_star_visit(st, t);  // abort the scan once a path is found
        },
        lg);
  }
  st.path.pop_back();
  return hit;
}

}  // namespace detail

/// Maximal set of vertex-disjoint shortest augmenting paths over a
/// radix-sorted level partition. Consumes level entries and pc-list entries
/// (run on a per-phase copy when the structure is reused).
inline std::vector<std::vector<VertexId>> dfs_star(BipartitePCList& bp, LevelPartition& l,
                                                   const Matching& m) {
  std::vector<std::vector<VertexId>> paths;
  if (l.empty()) return paths;
  detail::DfsStarState st{bp, l, m, {}, &paths};
  VertexId a = l.levels.head(1);
  while (a != VertexListFamily::kNull) {
    VertexId next = l.levels.next(a);
    detail::dfs_star_visit(st, a);  // discovered vertices never return to l
    st.path.clear();
    a = next;
  }
  return paths;
}

struct HopcroftKarpResult {
  Matching matching;
  int phases = 0;
  std::vector<std::uint64_t> phase_ledger_totals;
};

/// Runs phases until no augmenting path remains. Every phase works on a
/// fresh copy of the neighbor lists (DFS* consumes entries); the copy cost
/// is charged to the phase. Charges accumulate on bp's ledger.
inline HopcroftKarpResult hopcroft_karp(BipartitePCList& bp) {
  const int n = bp.pc.vertex_count();
  HopcroftKarpResult result;
  result.matching = Matching(n);
  for (;;) {
    BipartitePCList phase{bp.pc, bp.side, bp.a_count, bp.b_count};
    phase.pc.ledger().reset();
    phase.pc.ledger().charge(Charge::misc,
                             static_cast<std::uint64_t>(n) +
                                 static_cast<std::uint64_t>(phase.pc.m_tilde()));
    LevelPartition levels = bfs_star(phase, result.matching);
    bool progressed = false;
    if (!levels.empty()) {
      radix_sort_levels(phase, levels);
      auto paths = dfs_star(phase, levels, result.matching);
      for (const auto& path : paths) result.matching.augment(path);
      progressed = !paths.empty();
    }
    for (int c = 0; c < 4; ++c) {
      auto cat = static_cast<Charge>(c);
      bp.pc.ledger().charge(cat, phase.pc.ledger().count(cat));
    }
    ++result.phases;
    result.phase_ledger_totals.push_back(phase.pc.ledger().total());
    if (!progressed) break;
  }
  return result;
}

/// Maximum matching of a symmetric bipartite graph.
inline Matching hopcroft_karp(const Graph& g) {
  BipartitePCList bp = BipartitePCList::build(g);
  return hopcroft_karp(bp).matching;
}

}  // namespace pclist
