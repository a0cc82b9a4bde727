#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pclist/linked_lists.hpp"
#include "pclist/merge_scan.hpp"
#include "pclist/pclist.hpp"

// BFS and DFS on pc-lists in O(n + m_tilde) charged work, for out mode and
// seidel mode. Work is charged to the owning pc-list's ledger: discoveries as
// vertex charges, queue/stack traffic as queue ops, and every touched list
// element as a pclist element charge.
namespace pclist {

struct TraversalResult {
  std::vector<VertexId> order;                  // discovery order, original labels
  std::vector<std::optional<VertexId>> parent;  // original labels
  std::vector<std::optional<int>> level;        // BFS only
};

namespace detail {

inline void require_traversable(const PCList& p, VertexId source) {
  if (p.mode() != PCList::Mode::out && p.mode() != PCList::Mode::seidel)
    throw std::invalid_argument("traversal: pc-list must be in out or seidel mode");
  if (source < 0 || source >= p.vertex_count())
    throw std::invalid_argument("traversal: source out of range");
}

struct Segment {
  VertexId lo, hi;
  bool complemented;
  std::int32_t first;
};

// A current vertex scans one segment in out mode and two in seidel mode,
// where crossing the dummy cursor flips the effective bit.
inline int segments_for(const PCList& p, VertexId cv, Segment out[2]) {
  const VertexId n = p.vertex_count();
  if (p.mode() != PCList::Mode::seidel) {
    out[0] = {0, n, p.switched(cv), p.list_first(cv)};
    return 1;
  }
  const VertexId cut = p.seidel_cut();
  out[0] = {0, cut, p.switched(cv), p.list_first(cv)};
  out[1] = {cut, n, !p.switched(cv), p.dummy_cursor(cv)};
  return 2;
}

// One BFS tree grown from cs over whatever is still in u. Results are in
// current labels; parent is -1 for the root and level counts from 0.
inline void bfs_tree(PCList& p, VertexId cs, OrderedVertexList& u, std::vector<int>& level,
                     std::vector<VertexId>& parent, std::vector<VertexId>& order_current) {
  WorkLedger& lg = p.ledger();
  std::vector<VertexId> queue;
  std::size_t qhead = 0;

  // Discovery and dequeue are both vertex charges; list elements are charged
  // per scan below.
  auto discover = [&](VertexId cv, int lvl, VertexId par) {
    u.remove(cv);
    level[cv] = lvl;
    parent[cv] = par;
    order_current.push_back(cv);
    queue.push_back(cv);
    lg.charge(Charge::vertex);
  };

  discover(cs, 0, -1);
  while (qhead < queue.size()) {
    VertexId cv = queue[qhead++];
    lg.charge(Charge::vertex);
    Segment segs[2];
    int nseg = segments_for(p, cv, segs);
    for (int k = 0; k < nseg; ++k) {
      const Segment& seg = segs[k];
      if (!seg.complemented) {
        for (std::int32_t s = seg.first; s != kNullSlot; s = p.list_next(s)) {
          VertexId t = p.slot_value(s);
          if (t >= seg.hi) break;
          lg.charge(Charge::pclist_element);
          if (u.contains(t)) discover(t, level[cv] + 1, cv);
        }
      } else {
        // Mark the stored non-neighbors present in U, then sweep U: unmarked
        // members are discovered, marks are cleared on the same pass with
        // the clear charged to the element that set it.
        for (std::int32_t s = seg.first; s != kNullSlot; s = p.list_next(s)) {
          VertexId t = p.slot_value(s);
          if (t >= seg.hi) break;
          lg.charge(Charge::pclist_element);
          if (u.contains(t)) u.mark(t);
        }
        VertexId w = seg.lo == 0 ? u.head() : u.first_at_or_after_cut();
        while (w != OrderedVertexList::kNull && w < seg.hi) {
          VertexId next = u.next(w);
          if (u.marked(w)) {
            u.unmark(w);
            lg.charge(Charge::pclist_element);
          } else {
            discover(w, level[cv] + 1, cv);
          }
          w = next;
        }
      }
    }
  }
}

struct DfsState {
  PCList& p;
  OrderedVertexList& u;
  std::vector<VertexId>& parent;
  std::vector<VertexId>& order_current;
};

inline void dfs_visit(DfsState& st, VertexId cv) {
  PCList& p = st.p;
  WorkLedger& lg = p.ledger();
  lg.charge(Charge::queue_op);  // stack push
  Segment segs[2];
  int nseg = segments_for(p, cv, segs);
  for (int k = 0; k < nseg; ++k) {
    const Segment& seg = segs[k];
    if (!seg.complemented) {
      std::int32_t s = seg.first;
      while (s != kNullSlot) {
        VertexId t = p.slot_value(s);
        if (t >= seg.hi) break;
        lg.charge(Charge::pclist_element);
        s = p.list_next(s);  // advance before recursing; cv's list is private
        if (st.u.contains(t)) {
          st.u.remove(t);
          st.parent[t] = cv;
          st.order_current.push_back(t);
          lg.charge(Charge::vertex);
          dfs_visit(st, t);
        }
      }
    } else {
      auto u_start = [&] {
        return seg.lo == 0 ? st.u.head() : st.u.first_at_or_after_cut();
      };
      complemented_merge_scan(p, cv, seg.lo, seg.hi, seg.first, st.u, u_start,
                              [&](VertexId t) {
                                st.u.remove(t);
                                st.parent[t] = cv;
                                st.order_current.push_back(t);
                                lg.charge(Charge::vertex);
                                dfs_visit(st, t);
                                return true;
                              },
                              lg);
    }
  }
  lg.charge(Charge::queue_op);  // stack pop
}

inline TraversalResult to_original_labels(const PCList& p, const std::vector<VertexId>& order_cur,
                                          const std::vector<VertexId>& parent_cur,
                                          const std::vector<int>* level_cur) {
  const int n = p.vertex_count();
  TraversalResult r;
  r.parent.assign(n, std::nullopt);
  r.level.assign(n, std::nullopt);
  for (VertexId cv : order_cur) r.order.push_back(p.to_original(cv));
  for (VertexId cv = 0; cv < n; ++cv) {
    VertexId ov = p.to_original(cv);
    if (parent_cur[cv] >= 0) r.parent[ov] = p.to_original(parent_cur[cv]);
    if (level_cur && (*level_cur)[cv] >= 0) r.level[ov] = (*level_cur)[cv];
  }
  return r;
}

}  // namespace detail

/// BFS over whatever u still holds; u must be in current-label order. Used
/// directly by the component sweep and the all-sources loops.
inline TraversalResult pclist_bfs(PCList& p, VertexId source, OrderedVertexList& u) {
  detail::require_traversable(p, source);
  const int n = p.vertex_count();
  std::vector<int> level(n, -1);
  std::vector<VertexId> parent(n, -1), order;
  detail::bfs_tree(p, p.to_current(source), u, level, parent, order);
  return detail::to_original_labels(p, order, parent, &level);
}

inline TraversalResult pclist_bfs(PCList& p, VertexId source) {
  detail::require_traversable(p, source);
  OrderedVertexList u;
  u.init_full(p.vertex_count(), p.seidel_cut());
  return pclist_bfs(p, source, u);
}

/// DFS from source. Consumes stored list entries (the restarting step removes
/// entries as they die), so the pc-list's lists are spent afterwards; clone
/// first if the structure is needed again.
inline TraversalResult pclist_dfs(PCList& p, VertexId source) {
  detail::require_traversable(p, source);
  const int n = p.vertex_count();
  OrderedVertexList u;
  u.init_full(n, p.seidel_cut());
  std::vector<VertexId> parent(n, -1), order;
  VertexId cs = p.to_current(source);
  u.remove(cs);
  order.push_back(cs);
  p.ledger().charge(Charge::vertex);
  detail::DfsState st{p, u, parent, order};
  detail::dfs_visit(st, cs);
  return detail::to_original_labels(p, order, parent, nullptr);
}

/// Component ids for symmetric represented graphs: repeated BFS over one
/// shared undiscovered list, so the whole sweep stays within the traversal
/// work bound. Ids are the smallest original vertex id in each component.
inline std::vector<VertexId> connected_components(PCList& p) {
  if (p.mode() != PCList::Mode::out && p.mode() != PCList::Mode::seidel)
    throw std::invalid_argument("connected_components: pc-list must be in out or seidel mode");
  if (!p.represented_graph().is_symmetric())
    throw std::invalid_argument("connected_components: represented graph is not symmetric");
  const int n = p.vertex_count();
  OrderedVertexList u;
  u.init_full(n, p.seidel_cut());
  std::vector<int> level(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<VertexId> component(n, -1);
  for (VertexId cv = 0; cv < n; ++cv) {
    if (!u.contains(cv)) continue;
    std::vector<VertexId> order;
    detail::bfs_tree(p, cv, u, level, parent, order);
    VertexId id = p.vertex_count();
    for (VertexId c : order) id = std::min(id, p.to_original(c));
    for (VertexId c : order) component[p.to_original(c)] = id;
  }
  return component;
}

}  // namespace pclist
