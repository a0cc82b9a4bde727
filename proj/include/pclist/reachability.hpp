#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pclist/traversal.hpp"

// Diameter, eccentricities, and transitive closure by running the pc-list
// BFS from every vertex: O(n^2 + n*m_tilde) charged work in total.
namespace pclist {

/// n x n reachability bit matrix, reflexive by construction.
class ReachMatrix {
public:
  explicit ReachMatrix(int n) : n_(n), words_per_row_((n + 63) / 64), bits_(std::size_t(n) * words_per_row_, 0) {
    for (VertexId v = 0; v < n; ++v) set(v, v);
  }

  int size() const { return n_; }
  void set(VertexId u, VertexId v) {
    bits_[std::size_t(u) * words_per_row_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  bool get(VertexId u, VertexId v) const {
    return bits_[std::size_t(u) * words_per_row_ + (v >> 6)] >> (v & 63) & 1u;
  }
  std::int64_t popcount() const {
    std::int64_t total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return total;
  }
  friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

private:
  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DiameterResult {
  bool infinite = false;  // some ordered pair is unreachable
  int value = 0;          // max distance over reachable ordered pairs
};

struct Eccentricities {
  std::vector<int> value;         // max BFS distance over reached vertices
  std::vector<bool> reaches_all;  // false when some vertex is unreachable
};

namespace detail {

// Runs BFS from every vertex, handing each source's level array (current
// labels; -1 unreached) to the sink. Rebuilding the undiscovered list is
// charged one unit per vertex per source.
template <class Sink>
void all_sources_bfs(PCList& p, Sink&& sink) {
  if (p.mode() != PCList::Mode::out && p.mode() != PCList::Mode::seidel)
    throw std::invalid_argument("reachability: pc-list must be in out or seidel mode");
  const int n = p.vertex_count();
  if (n == 0) throw std::invalid_argument("reachability: empty graph");
  std::vector<int> level(n);
  std::vector<VertexId> parent(n), order;
  OrderedVertexList u;
  for (VertexId source = 0; source < n; ++source) {
    u.init_full(n, p.seidel_cut());
    p.ledger().charge(Charge::misc, static_cast<std::uint64_t>(n));
    std::fill(level.begin(), level.end(), -1);
    order.clear();
    bfs_tree(p, source, u, level, parent, order);
    sink(source, level);
  }
}

}  // namespace detail

inline Eccentricities eccentricities(PCList& p) {
  const int n = p.vertex_count();
  Eccentricities out;
  out.value.assign(n, 0);
  out.reaches_all.assign(n, true);
  detail::all_sources_bfs(p, [&](VertexId source, const std::vector<int>& level) {
    int worst = 0;
    bool all = true;
    for (VertexId cv = 0; cv < n; ++cv) {
      if (level[cv] < 0)
        all = false;
      else
        worst = std::max(worst, level[cv]);
    }
    VertexId ov = p.to_original(source);
    out.value[ov] = worst;
    out.reaches_all[ov] = all;
  });
  return out;
}

inline DiameterResult diameter(PCList& p) {
  Eccentricities ecc = eccentricities(p);
  DiameterResult r;
  for (std::size_t v = 0; v < ecc.value.size(); ++v) {
    r.value = std::max(r.value, ecc.value[v]);
    if (!ecc.reaches_all[v]) r.infinite = true;
  }
  return r;
}

inline ReachMatrix transitive_closure(PCList& p) {
  const int n = p.vertex_count();
  ReachMatrix m(n);
  detail::all_sources_bfs(p, [&](VertexId source, const std::vector<int>& level) {
    VertexId ou = p.to_original(source);
    for (VertexId cv = 0; cv < n; ++cv)
      if (level[cv] >= 0) m.set(ou, p.to_original(cv));
  });
  return m;
}

}  // namespace pclist
