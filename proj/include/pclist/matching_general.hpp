#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pclist/contraction.hpp"
#include "pclist/linked_lists.hpp"
#include "pclist/matching.hpp"
#include "pclist/merge_scan.hpp"
#include "pclist/pclist.hpp"

// Maximum cardinality matching on general graphs via blossom contraction on
// pc-lists. find_ap grows alternating trees through the undiscovered-list
// merge scan; blossom steps for a switched vertex walk the OUT list of live
// outer blossoms and test adjacency through per-vertex lookup vectors,
// appending misses to an auxiliary neighbor list so each pair is considered
// O(1) times. Cardinality-only: blossoms formed in a phase are expanded
// after augmentation and phases repeat until no augmenting path exists.
namespace pclist {

/// Adjacency lookup vectors for the switched vertices: bit u of row v answers
/// "is u adjacent to v in the represented graph" in O(1).
class LookupVectors {
public:
  static LookupVectors from_graph(const Graph& g, const PCList& p) {
    LookupVectors lv;
    const int n = g.vertex_count();
    lv.words_ = (n + 63) / 64;
    lv.rows_.assign(static_cast<std::size_t>(n), {});
    for (VertexId v = 0; v < n; ++v) {
      if (!p.switched(v)) continue;
      auto& row = lv.rows_[v];
      row.assign(lv.words_, 0);
      for (VertexId u : g.out_neighbors(v)) row[u >> 6] |= std::uint64_t{1} << (u & 63);
    }
    return lv;
  }

  // Quadratic decode; used when no explicit source graph is at hand.
  static LookupVectors from_pclist(const PCList& p) {
    return from_graph(p.represented_graph(), p);
  }

  bool adjacent(VertexId v, VertexId u) const {
    return rows_[v][u >> 6] >> (u & 63) & 1u;
  }
  bool has_row(VertexId v) const { return !rows_[v].empty(); }

private:
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Observability hook for the blossom-step invariants: invoked at every
/// blossom step with the scanning vertex, the two ends of the trigger edge,
/// the vertices absorbed into the surviving blossom, and the vertices still
/// undiscovered at that moment.
struct BlossomStepEvent {
  VertexId scanner = -1;
  VertexId edge_from = -1, edge_to = -1;
  std::vector<VertexId> absorbed;      // members of merged outer blossoms
  std::vector<VertexId> flipped;       // inner vertices turning outer
  std::vector<VertexId> undiscovered;  // U snapshot at the step
  std::vector<std::uint64_t> out_times;  // OUT list order at the step
};

struct FindApSetResult {
  std::vector<std::vector<VertexId>> paths;     // vertex-disjoint augmenting paths
  std::vector<std::vector<VertexId>> blossoms;  // formed blossoms (>= 3 vertices)
};

namespace detail {

struct GeneralMatcher {
  PCList& p;
  const Matching& m;
  const LookupVectors& lookup;
  std::vector<BlossomStepEvent>* trace;
  WorkLedger& lg;
  int n;

  enum class Status : std::uint8_t { undiscovered, outer, inner, dead };

  OrderedVertexList u;                  // undiscovered vertices
  std::vector<Status> status;
  std::vector<VertexId> parent;         // classic p[]: grow parents and bridge threading
  std::vector<std::uint64_t> disc_time; // discovery stamps (flip ordering)
  std::vector<std::uint64_t> out_time;  // per OUT anchor
  std::uint64_t clock = 0;

  // Blossoms: DSU keyed by vertex, base and OUT anchor per root, intrusive
  // member chains spliced on merges.
  std::vector<VertexId> dsu;
  std::vector<VertexId> base, anchor;
  std::vector<VertexId> member_head, member_tail, member_next;

  OrderedVertexList out;                    // live outer blossoms, outer order
  std::vector<std::vector<VertexId>> nprime;  // auxiliary neighbor lists
  std::vector<std::uint64_t> lca_stamp;
  std::uint64_t lca_clock = 0;

  std::vector<VertexId> tree_vertices;
  bool merged_this_round = false;

  FindApSetResult result;

  GeneralMatcher(PCList& p_, const Matching& m_, const LookupVectors& lv,
                 std::vector<BlossomStepEvent>* trace_)
      : p(p_), m(m_), lookup(lv), trace(trace_), lg(p_.ledger()), n(p_.vertex_count()) {
    u.init_full(n);
    status.assign(n, Status::undiscovered);
    parent.assign(n, -1);
    disc_time.assign(n, 0);
    out_time.assign(n, 0);
    dsu.resize(n);
    for (VertexId v = 0; v < n; ++v) dsu[v] = v;
    base.assign(n, -1);
    anchor.assign(n, -1);
    member_head.assign(n, -1);
    member_tail.assign(n, -1);
    member_next.assign(n, -1);
    out.init_empty(n);
    nprime.assign(n, {});
    lca_stamp.assign(n, 0);
  }

  VertexId find(VertexId v) {
    while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
    return v;
  }

  void make_outer(VertexId v) {
    status[v] = Status::outer;
    disc_time[v] = ++clock;
    VertexId r = find(v);
    base[r] = v;
    anchor[r] = v;
    member_head[r] = member_tail[r] = v;
    member_next[v] = -1;
    out.push_back(v);
    out_time[v] = clock;
    lg.charge(Charge::queue_op);
    tree_vertices.push_back(v);
  }

  enum class Outcome { kContinue, kPathFound };

  // ---- augmenting path extraction (classic parent/mate walk) ----

  void record_path(VertexId exposed) {
    std::vector<VertexId> path;
    VertexId v = exposed;
    while (v != -1) {
      path.push_back(v);
      VertexId pv = parent[v];
      path.push_back(pv);
      lg.charge(Charge::misc);
      v = m.mate[pv];
    }
    result.paths.push_back(std::move(path));
  }

  // ---- blossom machinery ----

  VertexId lca(VertexId a, VertexId b) {
    ++lca_clock;
    VertexId sides[2] = {a, b};
    bool parked[2] = {false, false};
    for (;;) {
      for (int i = 0; i < 2; ++i) {
        if (parked[i]) continue;
        VertexId r = find(sides[i]);
        lg.charge(Charge::misc);
        if (lca_stamp[r] == lca_clock) return r;
        lca_stamp[r] = lca_clock;
        VertexId b0 = base[r];
        if (m.mate[b0] == -1)
          parked[i] = true;  // reached the root blossom
        else
          sides[i] = parent[m.mate[b0]];
      }
    }
  }

  // Climbs from outer vertex v up to the lca blossom, threading parent
  // pointers across the new cycle and collecting the absorbed blossom roots
  // and the inner vertices that flip outer. Vertex-granular walk: inside
  // already-formed blossoms the parent pointers laid down by earlier merges
  // steer it.
  void mark_path(VertexId v, VertexId lca_root, VertexId child,
                 std::vector<VertexId>& absorbed_roots, std::vector<VertexId>& flipped) {
    while (find(v) != lca_root) {
      VertexId i = m.mate[v];
      absorbed_roots.push_back(find(v));
      absorbed_roots.push_back(find(i));
      if (status[i] == Status::inner) flipped.push_back(i);
      parent[v] = child;
      child = i;
      v = parent[i];
      lg.charge(Charge::misc);
    }
  }

  void splice_members(VertexId into, VertexId root) {
    if (member_head[root] == -1) return;
    if (member_head[into] == -1) {
      member_head[into] = member_head[root];
      member_tail[into] = member_tail[root];
    } else {
      member_next[member_tail[into]] = member_head[root];
      member_tail[into] = member_tail[root];
    }
    member_head[root] = member_tail[root] = -1;
  }

  // Performs the blossom step for trigger edge (x, y); both ends outer, in
  // different blossoms. Inner vertices along the two paths become outer and
  // are scanned recursively in discovery order.
  Outcome blossom_step(VertexId x, VertexId y) {
    VertexId l = lca(x, y);
    std::vector<VertexId> absorbed_roots, flipped;
    mark_path(x, l, y, absorbed_roots, flipped);
    mark_path(y, l, x, absorbed_roots, flipped);
    std::sort(absorbed_roots.begin(), absorbed_roots.end());
    absorbed_roots.erase(std::unique(absorbed_roots.begin(), absorbed_roots.end()),
                         absorbed_roots.end());
    merged_this_round = true;

    if (trace) {
      BlossomStepEvent ev;
      ev.scanner = x;
      ev.edge_from = x;
      ev.edge_to = y;
      for (VertexId r : absorbed_roots)
        for (VertexId w = member_head[r]; w != -1; w = member_next[w]) ev.absorbed.push_back(w);
      ev.flipped = flipped;
      for (VertexId w = u.head(); w != OrderedVertexList::kNull; w = u.next(w))
        ev.undiscovered.push_back(w);
      for (VertexId a = out.head(); a != OrderedVertexList::kNull; a = out.next(a))
        ev.out_times.push_back(out_time[a]);
      trace->push_back(std::move(ev));
    }

    VertexId base_keep = base[l];
    VertexId anchor_keep = anchor[l];
    for (VertexId r : absorbed_roots) {
      lg.charge(Charge::queue_op);
      if (status[r] == Status::outer && anchor[r] != -1 && out.contains(anchor[r]))
        out.remove(anchor[r]);  // invariant 1: its vertices are completely scanned
      if (status[r] != Status::inner) splice_members(l, r);
      dsu[find(r)] = l;
    }
    base[l] = base_keep;
    anchor[l] = anchor_keep;

    std::sort(flipped.begin(), flipped.end(),
              [&](VertexId a, VertexId b) { return disc_time[a] < disc_time[b]; });
    for (VertexId i : flipped) {
      status[i] = Status::outer;
      disc_time[i] = ++clock;
      member_next[i] = -1;
      if (member_head[l] == -1) {
        member_head[l] = member_tail[l] = i;
      } else {
        member_next[member_tail[l]] = i;
        member_tail[l] = i;
      }
      lg.charge(Charge::vertex);
    }
    for (VertexId i : flipped)
      if (visit(i) == Outcome::kPathFound) return Outcome::kPathFound;
    return Outcome::kContinue;
  }

  // ---- grow steps ----

  Outcome grow_child(VertexId t, VertexId from) {
    u.remove(t);
    tree_vertices.push_back(t);
    parent[t] = from;
    lg.charge(Charge::vertex);
    if (!m.matched(t)) {
      status[t] = Status::dead;
      record_path(t);
      return Outcome::kPathFound;
    }
    status[t] = Status::inner;
    disc_time[t] = ++clock;
    VertexId w = m.mate[t];
    u.remove(w);
    tree_vertices.push_back(w);
    make_outer(w);
    lg.charge(Charge::vertex);
    return visit(w);
  }

  Outcome grow_phase(VertexId x) {
    if (!p.switched(x)) {
      std::int32_t s = p.list_first(x);
      while (s != kNullSlot) {
        lg.charge(Charge::pclist_element);
        VertexId t = p.slot_value(s);
        s = p.list_next(s);
        if (u.contains(t) && grow_child(t, x) == Outcome::kPathFound)
          return Outcome::kPathFound;
      }
      return Outcome::kContinue;
    }
    auto u_start = [&] { return u.head(); };
    bool ok = complemented_merge_scan(
        p, x, 0, n, p.list_first(x), u, u_start,
        [&](VertexId t) { return grow_child(t, x) != Outcome::kPathFound; }, lg);
    return ok ? Outcome::kContinue : Outcome::kPathFound;
  }

  // ---- blossom scans ----

  // Probe one OUT entry from switched x: first adjacent member triggers a
  // blossom step; misses are charged to the members' entries in x's stored
  // non-neighbor list.
  Outcome probe_entry(VertexId x, VertexId entry_anchor, bool& fired) {
    VertexId r = find(entry_anchor);
    for (VertexId w = member_head[r]; w != -1; w = member_next[w]) {
      if (lookup.adjacent(x, w)) {
        lg.charge(Charge::misc);
        fired = true;
        return blossom_step(x, w);
      }
      lg.charge(Charge::pclist_element);  // w sits in x's stored list
    }
    return Outcome::kContinue;
  }

  // Scan the OUT list from x's resume position; sweep mode restarts behind
  // the blossom's own entry and may fire on earlier outers (the DFS pass
  // only ever meets later ones, which keeps invariant 1).
  Outcome out_scan(VertexId x) {
    for (;;) {
      // Restart step over the auxiliary list: drop entries that left OUT.
      auto& aux = nprime[x];
      while (!aux.empty() && !out.contains(aux.back())) {
        aux.pop_back();
        lg.charge(Charge::pclist_element);
      }
      VertexId cur;
      if (!aux.empty()) {
        cur = out.next(aux.back());
      } else {
        VertexId fb = anchor[find(x)];
        cur = fb != -1 && out.contains(fb) ? out.next(fb) : out.head();
      }
      lg.charge(Charge::misc);
      bool fired = false;
      while (cur != OrderedVertexList::kNull) {
        if (find(cur) == find(x)) {
          nprime[x].push_back(cur);
          cur = out.next(cur);
          lg.charge(Charge::misc);
          continue;
        }
        Outcome o = probe_entry(x, cur, fired);
        if (o == Outcome::kPathFound) return o;
        if (fired) break;  // structures changed; re-derive the position
        nprime[x].push_back(cur);
        cur = out.next(cur);
      }
      if (!fired) return Outcome::kContinue;
    }
  }

  // Scan pass for unswitched x over its own remaining list entries: outer
  // entries in other blossoms fire (in the DFS pass only when they became
  // outer after x), dead and same-blossom entries are consumed, inner ones
  // stay for later sweeps.
  Outcome list_scan(VertexId x, bool sweep) {
    std::int32_t s = p.list_first(x);
    while (s != kNullSlot) {
      lg.charge(Charge::pclist_element);
      VertexId t = p.slot_value(s);
      std::int32_t next = p.list_next(s);
      if (status[t] == Status::dead) {
        p.list_remove(x, s);
      } else if (status[t] == Status::outer) {
        if (find(t) == find(x)) {
          p.list_remove(x, s);
        } else if (sweep || out_time_of_blossom(t) > out_time_of_blossom(x)) {
          Outcome o = blossom_step(x, t);
          if (o == Outcome::kPathFound) return o;
          next = p.list_first(x);  // structures changed; rescan the remainder
        }
      }
      s = next;
    }
    return Outcome::kContinue;
  }

  std::uint64_t out_time_of_blossom(VertexId v) {
    VertexId a = anchor[find(v)];
    return a == -1 ? 0 : out_time[a];
  }

  Outcome scan_phase(VertexId x, bool sweep) {
    return p.switched(x) ? out_scan(x) : list_scan(x, sweep);
  }

  // find_ap: grow steps while undiscovered vertices are reachable, then
  // blossom steps.
  Outcome visit(VertexId x) {
    lg.charge(Charge::queue_op);
    if (grow_phase(x) == Outcome::kPathFound) return Outcome::kPathFound;
    Outcome o = scan_phase(x, /*sweep=*/false);
    lg.charge(Charge::queue_op);
    return o;
  }

  // Resumes every live outer vertex's scan until no blossom step fires, so
  // the failure certificate covers edges whose endpoints became outer after
  // the other side's scan finished.
  Outcome sweep_tree() {
    do {
      merged_this_round = false;
      for (std::size_t i = 0; i < tree_vertices.size(); ++i) {
        VertexId x = tree_vertices[i];
        if (status[x] != Status::outer) continue;
        nprime[x].clear();
        lg.charge(Charge::misc);
        if (scan_phase(x, /*sweep=*/true) == Outcome::kPathFound) return Outcome::kPathFound;
      }
    } while (merged_this_round);
    return Outcome::kContinue;
  }

  void collect_blossoms() {
    // Group the tree's vertices by final blossom; nontrivial groups are the
    // discovered blossoms.
    std::vector<VertexId> roots;
    for (VertexId v : tree_vertices) {
      VertexId r = find(v);
      if (status[v] != Status::dead && anchor[r] != -1 && member_head[r] != -1) {
        bool seen = false;
        for (VertexId q : roots) seen = seen || q == r;
        if (!seen) roots.push_back(r);
      }
    }
    for (VertexId r : roots) {
      std::vector<VertexId> members;
      for (VertexId w = member_head[r]; w != -1; w = member_next[w]) members.push_back(w);
      if (members.size() >= 3) {
        std::sort(members.begin(), members.end());
        result.blossoms.push_back(std::move(members));
      }
    }
  }

  void retire_tree() {
    collect_blossoms();
    for (VertexId v : tree_vertices) status[v] = Status::dead;
    while (out.head() != OrderedVertexList::kNull) {
      lg.charge(Charge::queue_op);
      out.remove(out.head());
    }
    tree_vertices.clear();
  }

  FindApSetResult run() {
    for (VertexId r = 0; r < n; ++r) {
      if (m.matched(r) || status[r] != Status::undiscovered) continue;
      u.remove(r);
      tree_vertices.push_back(r);
      parent[r] = -1;
      lg.charge(Charge::vertex);
      make_outer(r);
      Outcome o = visit(r);
      if (o != Outcome::kPathFound) o = sweep_tree();
      retire_tree();
    }
    return std::move(result);
  }
};

}  // namespace detail

/// One phase of augmenting-path discovery: a maximal set of vertex-disjoint
/// augmenting paths plus the blossoms formed along the way. The pc-list must
/// be in out mode (contracted inputs arrive that way); its list entries are
/// consumed, so run on a copy when the structure is reused. The lookup
/// vectors must describe the represented graph.
inline FindApSetResult find_ap_set(PCList& p, const Matching& m, const LookupVectors& lookup,
                                   std::vector<BlossomStepEvent>* trace = nullptr) {
  if (p.mode() != PCList::Mode::out)
    throw std::invalid_argument("find_ap_set: pc-list must be in out mode");
  if (static_cast<int>(m.mate.size()) != p.vertex_count())
    throw std::invalid_argument("find_ap_set: matching size mismatch");
  detail::GeneralMatcher matcher(p, m, lookup, trace);
  return matcher.run();
}

struct GeneralMatchingResult {
  Matching matching;
  int phases = 0;
  std::vector<std::uint64_t> phase_ledger_totals;     // copy + contract + search
  std::vector<std::uint64_t> find_ap_set_totals;      // the search alone
  WorkLedger ledger;                                  // accumulated over phases
};

/// Maximum cardinality matching. Builds the out representative and lookup
/// vectors once, then repeats contract / find_ap_set / augment / expand
/// until no augmenting path remains. Correct by Berge's theorem; the
/// O(sqrt(n)) phase bound of the weighted machinery is not preserved.
inline GeneralMatchingResult maximum_matching_detailed(const Graph& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("maximum_matching: input graph must be symmetric");
  const int n = g.vertex_count();
  PCList base = PCList::build_out_representative(g);
  LookupVectors lookup = LookupVectors::from_graph(g, base);

  GeneralMatchingResult result;
  result.matching = Matching(n);
  for (;;) {
    PCList phase = base;
    phase.ledger().reset();
    phase.ledger().charge(Charge::misc,
                          static_cast<std::uint64_t>(n) +
                              static_cast<std::uint64_t>(phase.m_tilde()));
    // Cardinality-only: every prior blossom was expanded, so the contraction
    // step is the identity compaction.
    contract_partition(phase, {});
    std::uint64_t before = phase.ledger().total();
    auto found = find_ap_set(phase, result.matching, lookup);
    result.find_ap_set_totals.push_back(phase.ledger().total() - before);
    for (const auto& path : found.paths) result.matching.augment(path);
    for (int c = 0; c < 4; ++c) {
      auto cat = static_cast<Charge>(c);
      base.ledger().charge(cat, phase.ledger().count(cat));
    }
    ++result.phases;
    result.phase_ledger_totals.push_back(phase.ledger().total());
    if (found.paths.empty()) break;
  }
  result.ledger = base.ledger().snapshot();
  return result;
}

inline Matching maximum_matching(const Graph& g) {
  return maximum_matching_detailed(g).matching;
}

}  // namespace pclist
