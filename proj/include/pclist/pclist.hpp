#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pclist/graph.hpp"
#include "pclist/linked_lists.hpp"
#include "pclist/work_ledger.hpp"

namespace pclist {

/// Partially complemented adjacency list: per-vertex switch bits plus
/// doubly-linked neighbor lists sorted ascending by current label. A switched
/// vertex stores non-neighbors. In seidel mode the vertices are relabeled so
/// the unswitched block precedes the switched block, and each list carries a
/// dummy cursor separating the two blocks; a scan flips the owner's effective
/// bit when it crosses the cursor.
///
/// A PCList and its WorkLedger form one mutable unit owned by a single
/// algorithm run. Copies are deep and enable parallel runs.
class PCList {
public:
  enum class Mode { out, in, seidel, gale_berlekamp };

  /// Minimum out representative: v is switched iff it has n/2 or more
  /// out-neighbors, so each list keeps the smaller of neighbors and
  /// non-neighbors and m_tilde is minimal over out-switch subsets. Switched
  /// lists hold sorted non-out-neighbors.
  static PCList build_out_representative(const Graph& g) {
    const int n = g.vertex_count();
    PCList p;
    p.init(n, Mode::out);
    for (VertexId v = 0; v < n; ++v)
      p.switched_[v] = 2 * g.out_degree(v) >= n ? 1 : 0;
    for (VertexId v = 0; v < n; ++v) {
      const auto& adj = g.out_neighbors(v);
      if (!p.switched_[v]) {
        for (VertexId u : adj) p.push_entry(v, u);
      } else {
        std::size_t i = 0;
        for (VertexId u = 0; u < n; ++u) {
          if (i < adj.size() && adj[i] == u) {
            ++i;
            continue;
          }
          if (u != v) p.push_entry(v, u);
        }
      }
    }
    return p;
  }

  /// Minimum in representative: v is switched iff it appears n/2 or more
  /// times in the adjacency lists. Entry (u -> v) is stored iff (u,v) in E
  /// xor switched(v). Size accounting only; traversal is defined for out and
  /// seidel modes.
  static PCList build_in_representative(const Graph& g) {
    const int n = g.vertex_count();
    PCList p;
    p.init(n, Mode::in);
    std::vector<int> indeg(n, 0);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : g.out_neighbors(u)) ++indeg[v];
    std::vector<VertexId> sw;
    for (VertexId v = 0; v < n; ++v)
      if (2 * indeg[v] >= n) {
        p.switched_[v] = 1;
        sw.push_back(v);
      }
    for (VertexId u = 0; u < n; ++u) {
      const auto& adj = g.out_neighbors(u);
      std::size_t i = 0, j = 0;
      while (i < adj.size() || j < sw.size()) {
        VertexId a = i < adj.size() ? adj[i] : n;
        VertexId s = j < sw.size() ? sw[j] : n;
        if (a < s) {
          if (!p.switched_[a]) p.push_entry(u, a);
          ++i;
        } else if (s < a) {
          if (s != u) p.push_entry(u, s);
          ++j;
        } else {  // neighbor and switched: stored bit cancels
          ++i;
          ++j;
        }
      }
    }
    return p;
  }

  /// Seidel pc-list for a given switch set on a symmetric graph. The stored
  /// lists are the adjacency lists of the Seidel-switched graph; the switch
  /// bits and dummy cursors recover the input graph during scans. Vertices
  /// are relabeled so unswitched labels precede switched ones; all public
  /// label mapping goes through to_current()/to_original().
  static PCList build_seidel(const Graph& g, std::vector<VertexId> switch_set) {
    if (!g.is_symmetric())
      throw std::invalid_argument("build_seidel: input graph must be symmetric");
    const int n = g.vertex_count();
    std::sort(switch_set.begin(), switch_set.end());
    switch_set.erase(std::unique(switch_set.begin(), switch_set.end()), switch_set.end());
    for (VertexId v : switch_set)
      if (v < 0 || v >= n) throw std::invalid_argument("build_seidel: vertex out of range");

    PCList p;
    p.init(n, Mode::seidel);
    std::vector<std::uint8_t> in_s(n, 0);
    for (VertexId v : switch_set) in_s[v] = 1;
    p.cut_ = n - static_cast<VertexId>(switch_set.size());

    p.to_current_.assign(n, 0);
    p.to_original_.assign(n, 0);
    VertexId low = 0, high = p.cut_;
    for (VertexId v = 0; v < n; ++v) {
      VertexId label = in_s[v] ? high++ : low++;
      p.to_current_[v] = label;
      p.to_original_[label] = v;
    }
    for (VertexId cv = 0; cv < n; ++cv) p.switched_[cv] = cv >= p.cut_ ? 1 : 0;

    // Raw lists in current labels: switched vertices store neighbors inside S
    // plus non-neighbors in V-S; unswitched store neighbors in V-S plus
    // non-neighbors in S. One counting pass then sorts every list at once.
    std::vector<std::vector<VertexId>> raw(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto& adj = g.out_neighbors(v);
      std::vector<std::uint8_t> nb(n, 0);
      for (VertexId u : adj) nb[u] = 1;
      auto& out = raw[p.to_current_[v]];
      for (VertexId u = 0; u < n; ++u) {
        if (u == v) continue;
        bool keep = in_s[v] ? (in_s[u] ? nb[u] : !nb[u]) : (in_s[u] ? !nb[u] : nb[u]);
        if (keep) out.push_back(p.to_current_[u]);
      }
    }
    std::vector<std::vector<VertexId>> buckets(n);
    for (VertexId cv = 0; cv < n; ++cv)
      for (VertexId t : raw[cv]) buckets[t].push_back(cv);
    for (VertexId t = 0; t < n; ++t)
      for (VertexId owner : buckets[t]) {
        std::int32_t slot = p.push_entry(owner, t);
        if (t >= p.cut_ && p.dummy_[owner] == kNullSlot) p.dummy_[owner] = slot;
      }
    return p;
  }

  /// Greedy Gale-Berlekamp heuristic: keep applying any in- or out-switch
  /// that strictly reduces the arc count. Result size is at most m and is
  /// not guaranteed minimum.
  static PCList greedy_gale_berlekamp(const Graph& g) {
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    auto bit = [&](std::vector<std::uint64_t>& row, VertexId v) -> bool {
      return row[v >> 6] >> (v & 63) & 1u;
    };
    auto flip_bit = [&](std::vector<std::uint64_t>& row, VertexId v) {
      row[v >> 6] ^= std::uint64_t{1} << (v & 63);
    };
    std::vector<int> outdeg(n, 0), indeg(n, 0);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : g.out_neighbors(u)) {
        flip_bit(rows[u], v);
        ++outdeg[u];
        ++indeg[v];
      }

    PCList p;
    p.init(n, Mode::gale_berlekamp);
    p.in_switched_.assign(n, 0);

    bool improved = n > 0;
    while (improved) {
      improved = false;
      for (VertexId u = 0; u < n; ++u) {
        if (n - 1 - 2 * outdeg[u] >= 0) continue;
        for (VertexId v = 0; v < n; ++v) {
          if (v == u) continue;
          flip_bit(rows[u], v);
          indeg[v] += bit(rows[u], v) ? 1 : -1;
        }
        outdeg[u] = n - 1 - outdeg[u];
        p.switched_[u] ^= 1;
        improved = true;
      }
      for (VertexId v = 0; v < n; ++v) {
        if (n - 1 - 2 * indeg[v] >= 0) continue;
        for (VertexId u = 0; u < n; ++u) {
          if (u == v) continue;
          flip_bit(rows[u], v);
          outdeg[u] += bit(rows[u], v) ? 1 : -1;
        }
        indeg[v] = n - 1 - indeg[v];
        p.in_switched_[v] ^= 1;
        improved = true;
      }
    }
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (v != u && bit(rows[u], v)) p.push_entry(u, v);
    return p;
  }

  /// Out-mode pc-list assembled from explicit parts (used by contraction and
  /// the bipartite representative). Lists must be strictly increasing with no
  /// self references.
  static PCList from_parts(std::vector<std::vector<VertexId>> lists,
                           std::vector<std::uint8_t> switched) {
    const int n = static_cast<int>(lists.size());
    if (switched.size() != lists.size())
      throw std::invalid_argument("PCList::from_parts: size mismatch");
    PCList p;
    p.init(n, Mode::out);
    p.switched_ = std::move(switched);
    for (VertexId v = 0; v < n; ++v) {
      VertexId last = -1;
      for (VertexId u : lists[v]) {
        if (u < 0 || u >= n || u == v || u <= last)
          throw std::invalid_argument("PCList::from_parts: invalid list");
        last = u;
        p.push_entry(v, u);
      }
    }
    return p;
  }

  Mode mode() const { return mode_; }
  int vertex_count() const { return n_; }
  std::int64_t m_tilde() const { return m_tilde_; }

  // Switch bit, indexed by current label.
  bool switched(VertexId current) const { return switched_[current] != 0; }
  bool in_switched(VertexId v) const {
    return !in_switched_.empty() && in_switched_[v] != 0;
  }

  VertexId to_current(VertexId original) const {
    return to_current_.empty() ? original : to_current_[original];
  }
  VertexId to_original(VertexId current) const {
    return to_original_.empty() ? current : to_original_[current];
  }
  // First current label of the switched block (seidel); n otherwise.
  VertexId seidel_cut() const { return mode_ == Mode::seidel ? cut_ : n_; }

  std::int32_t list_first(VertexId v) const { return lists_.first(v); }
  std::int32_t list_last(VertexId v) const { return lists_.last(v); }
  std::int32_t list_next(std::int32_t slot) const { return lists_.next(slot); }
  std::int32_t list_prev(std::int32_t slot) const { return lists_.prev(slot); }
  VertexId slot_value(std::int32_t slot) const { return lists_.value(slot); }
  // Dummy separator: first slot of the switched-label block, kNullSlot when
  // that block is empty.
  std::int32_t dummy_cursor(VertexId v) const {
    return dummy_.empty() ? kNullSlot : dummy_[v];
  }

  // O(1) removal; keeps m_tilde and the dummy cursor consistent.
  void list_remove(VertexId v, std::int32_t slot) {
    if (!dummy_.empty() && dummy_[v] == slot) dummy_[v] = lists_.next(slot);
    lists_.remove(v, slot);
    --m_tilde_;
  }

  // Sorted snapshot of one list in current labels.
  std::vector<VertexId> list_values(VertexId v) const {
    std::vector<VertexId> out;
    for (auto s = lists_.first(v); s != kNullSlot; s = lists_.next(s))
      out.push_back(lists_.value(s));
    return out;
  }

  /// Explicit reconstruction of the graph the pc-list represents; inverse of
  /// every builder on its input. Quadratic by contract.
  Graph represented_graph() const {
    Graph g(n_, true);
    std::vector<std::uint8_t> row(n_, 0);
    for (VertexId v = 0; v < n_; ++v) {
      std::fill(row.begin(), row.end(), 0);
      for (auto s = lists_.first(v); s != kNullSlot; s = lists_.next(s)) row[lists_.value(s)] = 1;
      for (VertexId u = 0; u < n_; ++u) {
        if (u == v) continue;
        bool arc = false;
        switch (mode_) {
          case Mode::out:
            arc = switched_[v] ? !row[u] : row[u];
            break;
          case Mode::in:
            arc = row[u] != (switched_[u] != 0);
            break;
          case Mode::seidel:
            // Stored lists are the switched graph; flipping the cut pairs
            // recovers the input.
            arc = row[u] != ((v >= cut_) != (u >= cut_));
            break;
          case Mode::gale_berlekamp:
            arc = row[u] != ((switched_[v] ^ in_switched_[u]) != 0);
            break;
        }
        if (arc) g.add_edge(to_original(v), to_original(u));
      }
    }
    g.finalize();
    return g;
  }

  WorkLedger& ledger() { return ledger_; }
  const WorkLedger& ledger() const { return ledger_; }

  /// Wholesale replacement used by contraction; the ledger is kept.
  void replace_structure(std::vector<std::vector<VertexId>> lists,
                         std::vector<std::uint8_t> switched) {
    WorkLedger keep = ledger_;
    PCList next = from_parts(std::move(lists), std::move(switched));
    next.ledger_ = keep;
    *this = std::move(next);
  }

private:
  void init(int n, Mode mode) {
    n_ = n;
    mode_ = mode;
    switched_.assign(n, 0);
    lists_.init(n);
    if (mode == Mode::seidel) dummy_.assign(n, kNullSlot);
    m_tilde_ = 0;
    cut_ = n;
  }

  std::int32_t push_entry(VertexId v, VertexId u) {
    ++m_tilde_;
    return lists_.push_back(v, u);
  }

  int n_ = 0;
  Mode mode_ = Mode::out;
  ListPool lists_;
  std::vector<std::uint8_t> switched_;
  std::vector<std::uint8_t> in_switched_;      // gale_berlekamp only
  std::vector<std::int32_t> dummy_;            // seidel only
  std::vector<VertexId> to_current_, to_original_;  // seidel only
  VertexId cut_ = 0;
  std::int64_t m_tilde_ = 0;
  WorkLedger ledger_;
};

}  // namespace pclist
