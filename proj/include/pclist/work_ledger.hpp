#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace pclist {

/// Categories of charged unit work. Algorithms charge exactly one unit per
/// operation their charging argument attributes to a vertex, a pc-list
/// element, a queue/stack operation, or bookkeeping.
enum class Charge : int {
  vertex = 0,
  pclist_element = 1,
  queue_op = 2,
  misc = 3,
};

inline constexpr std::array<std::string_view, 4> kChargeNames = {
    "vertex_charge", "pclist_element_charge", "queue_op", "ledger_misc"};

class WorkLedger {
public:
  void reset() { counts_.fill(0); }

  void charge(Charge c) { ++counts_[static_cast<std::size_t>(c)]; }
  void charge(Charge c, std::uint64_t units) { counts_[static_cast<std::size_t>(c)] += units; }

  std::uint64_t count(Charge c) const { return counts_[static_cast<std::size_t>(c)]; }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  // Side-effect free copy of the current counters.
  WorkLedger snapshot() const { return *this; }

private:
  std::array<std::uint64_t, 4> counts_{};
};

}  // namespace pclist
