#pragma once

#include <cstdint>
#include <list>
#include <stdexcept>
#include <vector>

#include "pclist/pclist.hpp"

// Contraction of vertex subsets of an out-mode pc-list. Building a contracted
// vertex's list follows the merge-style intersection/union of the switched
// and unswitched members; afterwards one relabel-sort-dedup pass rewrites the
// remaining lists and compacts ids. The per-set construction charges
// O(n(B) + m_tilde(B)); the global pass is charged by contract_partition.
namespace pclist {

struct ContractionResult {
  VertexId new_id = -1;                // id of the contracted vertex
  std::vector<VertexId> old_to_new;    // defined for every old vertex
};

namespace detail {

struct ContractCore {
  bool switched = false;
  std::vector<VertexId> values;  // old labels; sorted iff switched
};

// Builds the contracted vertex's list from its members' lists. Switched
// members intersect their stored non-neighbor lists; unswitched members
// union their neighbor lists; the combine removes the union and the members
// themselves from the intersection.
inline ContractCore build_contracted_list(PCList& p, const std::vector<VertexId>& b,
                                          std::vector<std::uint8_t>& scratch) {
  WorkLedger& lg = p.ledger();
  const std::uint8_t kMember = 1, kUnion = 2;
  for (VertexId v : b) {
    if (v < 0 || v >= p.vertex_count())
      throw std::invalid_argument("contract: vertex out of range");
    scratch[v] |= kMember;
    lg.charge(Charge::vertex);
  }

  std::vector<VertexId> switched_members, plain_members;
  for (VertexId v : b)
    (p.switched(v) ? switched_members : plain_members).push_back(v);

  // Y: distinct union of the unswitched members' lists.
  std::vector<VertexId> union_values;
  for (VertexId v : plain_members)
    for (auto s = p.list_first(v); s != kNullSlot; s = p.list_next(s)) {
      lg.charge(Charge::pclist_element);
      VertexId t = p.slot_value(s);
      if (!(scratch[t] & kUnion)) {
        scratch[t] |= kUnion;
        union_values.push_back(t);
      }
    }

  ContractCore core;
  if (!switched_members.empty()) {
    core.switched = true;
    // X: intersection of the switched members' lists, kept as a linked list
    // so each removal is O(1) and charged to the element that dies.
    std::list<VertexId> x;
    VertexId seed = switched_members.front();
    for (auto s = p.list_first(seed); s != kNullSlot; s = p.list_next(s)) {
      lg.charge(Charge::pclist_element);
      x.push_back(p.slot_value(s));
    }
    for (std::size_t i = 1; i < switched_members.size(); ++i) {
      VertexId m = switched_members[i];
      auto xi = x.begin();
      auto s = p.list_first(m);
      while (xi != x.end()) {
        VertexId t = s != kNullSlot ? p.slot_value(s) : p.vertex_count();
        lg.charge(Charge::pclist_element);
        if (*xi == t) {
          ++xi;
          s = p.list_next(s);
        } else if (*xi > t) {
          s = p.list_next(s);
        } else {
          xi = x.erase(xi);
        }
      }
    }
    for (VertexId t : x) {
      lg.charge(Charge::pclist_element);
      if (!(scratch[t] & kUnion) && !(scratch[t] & kMember)) core.values.push_back(t);
    }
  } else {
    core.switched = false;
    for (VertexId t : union_values) {
      lg.charge(Charge::pclist_element);
      if (!(scratch[t] & kMember)) core.values.push_back(t);
    }
  }

  for (VertexId t : union_values) scratch[t] &= ~kUnion;
  for (VertexId v : b) scratch[v] &= ~kMember;
  return core;
}

// Relabels every list through the contraction map, radix-sorts, and applies
// the dedup rules: an unswitched owner keeps one entry per touched blossom,
// a switched owner keeps a blossom iff all of its members occur. When
// charge_everything is false only entries that reference members are charged:
// single-set contraction pays for member-incident work, and the sweep over
// everything else belongs to the batched cleanup's budget.
inline std::vector<VertexId> cleanup_and_compact(
    PCList& p, const std::vector<std::vector<VertexId>>& beta,
    const std::vector<ContractCore>& cores, bool charge_everything) {
  WorkLedger& lg = p.ledger();
  const int n = p.vertex_count();
  const int sets = static_cast<int>(beta.size());

  std::vector<int> set_of(n, -1);
  std::vector<VertexId> anchor(sets, -1);
  for (int j = 0; j < sets; ++j)
    for (VertexId v : beta[j]) {
      if (set_of[v] != -1) throw std::invalid_argument("contract: overlapping sets");
      set_of[v] = j;
      if (anchor[j] < 0 || v < anchor[j]) anchor[j] = v;
    }

  std::vector<VertexId> old_to_new(n, -1);
  int next_id = 0;
  for (VertexId v = 0; v < n; ++v)
    if (set_of[v] < 0 || anchor[set_of[v]] == v) old_to_new[v] = next_id++;
  for (VertexId v = 0; v < n; ++v)
    if (old_to_new[v] < 0) old_to_new[v] = old_to_new[anchor[set_of[v]]];
  const int new_n = next_id;

  std::vector<std::int64_t> occur(sets, 0);
  std::vector<int> touched;
  // (target, owner) pairs bucketed by new target label: emitting bucket by
  // bucket leaves every rebuilt list sorted.
  std::vector<std::vector<VertexId>> buckets(new_n);
  std::vector<std::uint8_t> new_switched(new_n, 0);

  auto emit_list = [&](VertexId owner_old, bool owner_switched, auto&& each_entry) {
    VertexId owner_new = old_to_new[owner_old];
    new_switched[owner_new] = owner_switched ? 1 : 0;
    touched.clear();
    each_entry([&](VertexId target_old) {
      int j = set_of[target_old];
      if (j < 0) {
        if (charge_everything) lg.charge(Charge::pclist_element);
        VertexId t = old_to_new[target_old];
        if (t != owner_new) buckets[t].push_back(owner_new);
        return;
      }
      lg.charge(Charge::pclist_element);  // member-incident entries count toward the set budget
      if (occur[j] == 0) touched.push_back(j);
      ++occur[j];
    });
    for (int j : touched) {
      bool keep = owner_switched ? occur[j] == static_cast<std::int64_t>(beta[j].size())
                                 : occur[j] > 0;
      VertexId t = old_to_new[anchor[j]];
      if (keep && t != owner_new) buckets[t].push_back(owner_new);
      occur[j] = 0;
    }
  };

  for (VertexId v = 0; v < n; ++v) {
    if (charge_everything) lg.charge(Charge::vertex);
    int j = set_of[v];
    if (j >= 0 && anchor[j] != v) continue;  // subsumed by the contraction
    if (j < 0) {
      emit_list(v, p.switched(v), [&](auto&& sink) {
        for (auto s = p.list_first(v); s != kNullSlot; s = p.list_next(s))
          sink(p.slot_value(s));
      });
    } else {
      emit_list(v, cores[j].switched, [&](auto&& sink) {
        for (VertexId t : cores[j].values) sink(t);
      });
    }
  }

  std::vector<std::vector<VertexId>> new_lists(new_n);
  for (VertexId t = 0; t < new_n; ++t)
    for (VertexId owner : buckets[t]) new_lists[owner].push_back(t);
  p.replace_structure(std::move(new_lists), std::move(new_switched));
  return old_to_new;
}

inline void require_out_mode(const PCList& p) {
  if (p.mode() != PCList::Mode::out)
    throw std::invalid_argument("contract: pc-list must be in out mode");
}

}  // namespace detail

/// Contracts the set b to a single vertex in place and returns its new id
/// plus the old-to-new vertex map (ids are compacted). The new vertex is
/// switched iff b contains a switched member.
inline ContractionResult contract_set(PCList& p, std::vector<VertexId> b) {
  detail::require_out_mode(p);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.empty()) throw std::invalid_argument("contract_set: empty set");
  std::vector<std::uint8_t> scratch(p.vertex_count(), 0);
  std::vector<detail::ContractCore> cores;
  cores.push_back(detail::build_contracted_list(p, b, scratch));
  std::vector<std::vector<VertexId>> beta{b};
  ContractionResult r;
  r.old_to_new = detail::cleanup_and_compact(p, beta, cores, /*charge_everything=*/false);
  r.new_id = r.old_to_new[b.front()];
  return r;
}

/// Contracts a family of pairwise disjoint sets in place; total charged work
/// O(n + m_tilde). Returns the old-to-new vertex map.
inline std::vector<VertexId> contract_partition(PCList& p,
                                                const std::vector<std::vector<VertexId>>& beta) {
  detail::require_out_mode(p);
  std::vector<std::vector<VertexId>> live;
  for (auto set : beta) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty()) live.push_back(std::move(set));
  }
  std::vector<std::uint8_t> scratch(p.vertex_count(), 0);
  std::vector<detail::ContractCore> cores;
  cores.reserve(live.size());
  for (const auto& set : live) {
    cores.push_back(detail::build_contracted_list(p, set, scratch));
    // Disjointness is validated by cleanup; clear member marks between sets.
  }
  return detail::cleanup_and_compact(p, live, cores, /*charge_everything=*/true);
}

/// Number of stored elements incident to b: entries owned by members plus
/// entries elsewhere that reference members. Instrumentation for the
/// contract_set work bound; not charged.
inline std::int64_t incident_list_size(const PCList& p, const std::vector<VertexId>& b) {
  std::vector<std::uint8_t> member(p.vertex_count(), 0);
  for (VertexId v : b) member[v] = 1;
  std::int64_t total = 0;
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    for (auto s = p.list_first(v); s != kNullSlot; s = p.list_next(s))
      if (member[v] || member[p.slot_value(s)]) ++total;
  return total;
}

}  // namespace pclist
