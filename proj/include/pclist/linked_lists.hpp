#pragma once

#include <cstdint>
#include <vector>

#include "pclist/graph.hpp"

namespace pclist {

inline constexpr std::int32_t kNullSlot = -1;

/// Pool of doubly-linked lists over slot-addressed nodes. Each list keeps its
/// elements in the order they were appended; slots stay valid until removed.
/// Removal is O(1) given the slot, as are predecessor/successor access.
class ListPool {
public:
  void init(int list_count, std::size_t reserve_nodes = 0) {
    head_.assign(static_cast<std::size_t>(list_count), kNullSlot);
    tail_.assign(static_cast<std::size_t>(list_count), kNullSlot);
    values_.clear();
    prev_.clear();
    next_.clear();
    if (reserve_nodes) {
      values_.reserve(reserve_nodes);
      prev_.reserve(reserve_nodes);
      next_.reserve(reserve_nodes);
    }
  }

  int list_count() const { return static_cast<int>(head_.size()); }

  std::int32_t push_back(int list, VertexId value) {
    auto slot = static_cast<std::int32_t>(values_.size());
    values_.push_back(value);
    prev_.push_back(tail_[list]);
    next_.push_back(kNullSlot);
    if (tail_[list] != kNullSlot)
      next_[tail_[list]] = slot;
    else
      head_[list] = slot;
    tail_[list] = slot;
    return slot;
  }

  void remove(int list, std::int32_t slot) {
    std::int32_t p = prev_[slot], n = next_[slot];
    if (p != kNullSlot) next_[p] = n; else head_[list] = n;
    if (n != kNullSlot) prev_[n] = p; else tail_[list] = p;
    prev_[slot] = next_[slot] = kNullSlot;
  }

  std::int32_t first(int list) const { return head_[list]; }
  std::int32_t last(int list) const { return tail_[list]; }
  std::int32_t next(std::int32_t slot) const { return next_[slot]; }
  std::int32_t prev(std::int32_t slot) const { return prev_[slot]; }
  VertexId value(std::int32_t slot) const { return values_[slot]; }

private:
  std::vector<VertexId> values_;
  std::vector<std::int32_t> prev_, next_;
  std::vector<std::int32_t> head_, tail_;
};

/// Ordered doubly-linked list over the vertex ids [0, n), each present at
/// most once, with per-vertex mark bits. The list order always matches the
/// order vertices were appended (ascending label order for undiscovered
/// lists). An optional cut label gives O(1) access to the first element at
/// or past the cut, maintained across removals.
class OrderedVertexList {
public:
  void init_full(int n, VertexId cut = -1) {
    n_ = n;
    cut_ = cut;
    prev_.assign(n, kNull);
    next_.assign(n, kNull);
    present_.assign(n, true);
    marked_.assign(n, false);
    head_ = n > 0 ? 0 : kNull;
    tail_ = n > 0 ? n - 1 : kNull;
    for (VertexId v = 0; v < n; ++v) {
      prev_[v] = v > 0 ? v - 1 : kNull;
      next_[v] = v + 1 < n ? v + 1 : kNull;
    }
    first_at_cut_ = (cut_ >= 0 && cut_ < n) ? cut_ : kNull;
  }

  void init_empty(int n) {
    n_ = n;
    cut_ = -1;
    prev_.assign(n, kNull);
    next_.assign(n, kNull);
    present_.assign(n, false);
    marked_.assign(n, false);
    head_ = tail_ = kNull;
    first_at_cut_ = kNull;
  }

  // Append at the tail; caller keeps the order sorted.
  void push_back(VertexId v) {
    present_[v] = true;
    prev_[v] = tail_;
    next_[v] = kNull;
    if (tail_ != kNull) next_[tail_] = v; else head_ = v;
    tail_ = v;
    if (cut_ >= 0 && first_at_cut_ == kNull && v >= cut_) first_at_cut_ = v;
  }

  void remove(VertexId v) {
    if (!present_[v]) return;
    if (v == first_at_cut_) first_at_cut_ = next_[v];
    if (prev_[v] != kNull) next_[prev_[v]] = next_[v]; else head_ = next_[v];
    if (next_[v] != kNull) prev_[next_[v]] = prev_[v]; else tail_ = prev_[v];
    present_[v] = false;
    prev_[v] = next_[v] = kNull;
  }

  bool contains(VertexId v) const { return present_[v]; }
  VertexId head() const { return head_; }
  VertexId next(VertexId v) const { return next_[v]; }
  VertexId prev(VertexId v) const { return prev_[v]; }
  bool empty() const { return head_ == kNull; }
  // First element with label >= the cut passed to init_full.
  VertexId first_at_or_after_cut() const { return first_at_cut_; }

  void mark(VertexId v) { marked_[v] = true; }
  void unmark(VertexId v) { marked_[v] = false; }
  bool marked(VertexId v) const { return marked_[v]; }

  static constexpr VertexId kNull = -1;

private:
  int n_ = 0;
  VertexId cut_ = -1;
  VertexId head_ = kNull, tail_ = kNull, first_at_cut_ = kNull;
  std::vector<VertexId> prev_, next_;
  std::vector<bool> present_, marked_;
};

/// Family of doubly-linked vertex lists sharing one set of link arrays; a
/// vertex belongs to at most one list at a time. Used for level partitions.
class VertexListFamily {
public:
  void init(int n, int lists) {
    prev_.assign(n, kNull);
    next_.assign(n, kNull);
    list_of_.assign(n, -1);
    head_.assign(lists, kNull);
    tail_.assign(lists, kNull);
  }

  void push_back(int list, VertexId v) {
    list_of_[v] = list;
    prev_[v] = tail_[list];
    next_[v] = kNull;
    if (tail_[list] != kNull) next_[tail_[list]] = v; else head_[list] = v;
    tail_[list] = v;
  }

  void remove(VertexId v) {
    int list = list_of_[v];
    if (list < 0) return;
    if (prev_[v] != kNull) next_[prev_[v]] = next_[v]; else head_[list] = next_[v];
    if (next_[v] != kNull) prev_[next_[v]] = prev_[v]; else tail_[list] = prev_[v];
    prev_[v] = next_[v] = kNull;
    list_of_[v] = -1;
  }

  bool contains(VertexId v) const { return list_of_[v] >= 0; }
  int list_of(VertexId v) const { return list_of_[v]; }
  VertexId head(int list) const { return head_[list]; }
  VertexId next(VertexId v) const { return next_[v]; }
  bool empty(int list) const { return head_[list] == kNull; }
  int list_count() const { return static_cast<int>(head_.size()); }

  static constexpr VertexId kNull = -1;

private:
  std::vector<VertexId> prev_, next_;
  std::vector<int> list_of_;
  std::vector<VertexId> head_, tail_;
};

}  // namespace pclist
