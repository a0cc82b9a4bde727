#pragma once

#include <vector>

#include "pclist/graph.hpp"

namespace pclist {

/// A matching as a symmetric mate map; mate[v] == -1 when v is unmatched.
struct Matching {
  std::vector<VertexId> mate;
  int size = 0;

  explicit Matching(int n = 0) : mate(n, -1) {}

  bool matched(VertexId v) const { return mate[v] >= 0; }

  void add_edge(VertexId u, VertexId v) {
    mate[u] = v;
    mate[v] = u;
    ++size;
  }

  // Flips matched/unmatched status along an augmenting path (odd length,
  // both endpoints unmatched); grows the matching by one.
  void augment(const std::vector<VertexId>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
      mate[path[i]] = path[i + 1];
      mate[path[i + 1]] = path[i];
    }
    ++size;
  }
};

// Every matched edge must exist in g and mate must be symmetric.
inline bool is_valid_matching(const Graph& g, const Matching& m) {
  int count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m.mate[v] < 0) continue;
    VertexId u = m.mate[v];
    if (u < 0 || u >= g.vertex_count() || m.mate[u] != v || !g.has_arc(v, u)) return false;
    if (v < u) ++count;
  }
  return count == m.size;
}

}  // namespace pclist
