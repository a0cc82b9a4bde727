#pragma once

#include <cstdint>

#include "pclist/pclist.hpp"
#include "pclist/work_ledger.hpp"

namespace pclist::detail {

// Merge-style scan that enumerates, in ascending current-label order, the
// members of an ordered undiscovered list U that do NOT occur in the owner's
// stored list segment [lo, hi). This is the complemented neighbor walk: for a
// switched vertex the stored entries are non-neighbors, so the gaps in the
// merge are the effective neighbors.
//
// on_child(v) is invoked for each effective neighbor; it must remove v from U
// before returning and may consume further U members (recursion). It returns
// false to abort the whole scan. After each child returns, the restarting
// step prunes stored entries whose vertices already left U (each entry is
// removed at most once) and resumes the merge right after the last stored
// entry still present in U.
//
// UView needs head-of-segment access via u_start(), plus next(v) and
// contains(v). The owner's list entries in [lo, hi) that are matched against
// discovered vertices are removed, so the scan consumes the list.
template <class UView, class UStart, class OnChild>
bool complemented_merge_scan(PCList& p, VertexId owner, VertexId lo, VertexId hi,
                             std::int32_t seg_first, UView& u, UStart&& u_start,
                             OnChild&& on_child, WorkLedger& ledger) {
  constexpr VertexId kNoVertex = -1;
  std::int32_t n_slot = seg_first;
  VertexId uv = u_start();

  auto slot_label = [&](std::int32_t s) -> VertexId {
    if (s == kNullSlot) return kNoVertex;
    VertexId x = p.slot_value(s);
    return x < hi ? x : kNoVertex;  // entries past the segment act as absent
  };

  while (uv != kNoVertex && uv < hi) {
    VertexId nv = slot_label(n_slot);
    if (nv != kNoVertex && uv == nv) {
      ledger.charge(Charge::pclist_element);
      uv = u.next(uv);
      n_slot = p.list_next(n_slot);
    } else if (nv != kNoVertex && uv > nv) {
      // Stored entry for an already-consumed vertex: drop it.
      ledger.charge(Charge::pclist_element);
      std::int32_t dead = n_slot;
      n_slot = p.list_next(n_slot);
      p.list_remove(owner, dead);
    } else {
      if (!on_child(uv)) return false;
      // Restarting step: walk back over entries that left U, then resume
      // the merge after the last entry still undiscovered.
      std::int32_t back = n_slot == kNullSlot ? p.list_last(owner) : p.list_prev(n_slot);
      while (back != kNullSlot && p.slot_value(back) >= lo && !u.contains(p.slot_value(back))) {
        std::int32_t dead = back;
        back = p.list_prev(back);
        ledger.charge(Charge::pclist_element);
        p.list_remove(owner, dead);
      }
      ledger.charge(Charge::misc);
      if (back == kNullSlot || p.slot_value(back) < lo)
        uv = u_start();
      else
        uv = u.next(p.slot_value(back));
    }
  }
  return true;
}

}  // namespace pclist::detail
