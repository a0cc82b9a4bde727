#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "pclist/graph.hpp"

// Reference implementations used to verify the pc-list algorithms. Everything
// here works on explicit adjacency (or matrix) representations and shares no
// code with the pc-list modules.
namespace pclist::oracles {

// Adjacency matrix helper; row-major n*n bools.
inline std::vector<std::vector<bool>> to_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) m[u][v] = true;
  return m;
}

inline Graph from_matrix(const std::vector<std::vector<bool>>& m) {
  const int n = static_cast<int>(m.size());
  Graph g(n, true);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && m[u][v]) g.add_edge(u, v);
  g.finalize();
  return g;
}

// Explicit application of the switch operators: out-switching u flips row u,
// in-switching v flips column v, Seidel-switching flips both on a symmetric
// graph. Order independent.
inline Graph apply_switches(const Graph& g, const std::vector<VertexId>& out_set,
                            const std::vector<VertexId>& in_set,
                            const std::vector<VertexId>& seidel_set) {
  if (!seidel_set.empty() && !g.is_symmetric())
    throw std::invalid_argument("apply_switches: Seidel switches need a symmetric graph");
  const int n = g.vertex_count();
  auto m = to_matrix(g);
  auto flip_row = [&](VertexId u) {
    for (VertexId v = 0; v < n; ++v)
      if (v != u) m[u][v] = !m[u][v];
  };
  auto flip_col = [&](VertexId v) {
    for (VertexId u = 0; u < n; ++u)
      if (u != v) m[u][v] = !m[u][v];
  };
  for (VertexId u : out_set) flip_row(u);
  for (VertexId v : in_set) flip_col(v);
  for (VertexId v : seidel_set) {
    flip_row(v);
    flip_col(v);
  }
  return from_matrix(m);
}

enum class SwitchKind { out, in, seidel, gale_berlekamp };

// Exact minimum edge count over the switching class by exhaustive
// enumeration. 2^n subsets (4^n in/out pairs for Gale-Berlekamp).
inline std::int64_t brute_min_representative(const Graph& g, SwitchKind kind) {
  const int n = g.vertex_count();
  const int cap = kind == SwitchKind::gale_berlekamp ? 10 : 14;
  if (n > cap) throw std::invalid_argument("brute_min_representative: n over enumeration cap");
  if (kind == SwitchKind::seidel && !g.is_symmetric())
    throw std::invalid_argument("brute_min_representative: Seidel needs a symmetric graph");

  // Bitset rows; arc (u,v) lives in bit v of row u.
  std::vector<std::uint32_t> rows(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) rows[u] |= 1u << v;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  auto count_arcs = [&](std::uint32_t out_mask, std::uint32_t in_mask) {
    std::int64_t arcs = 0;
    for (VertexId u = 0; u < n; ++u) {
      std::uint32_t row = rows[u] ^ in_mask;
      if (out_mask >> u & 1u) row ^= full;
      row &= full & ~(1u << u);
      arcs += std::popcount(row);
    }
    return arcs;
  };

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  switch (kind) {
    case SwitchKind::out:
      for (std::uint32_t s = 0; s <= full; ++s) best = std::min(best, count_arcs(s, 0));
      break;
    case SwitchKind::in:
      for (std::uint32_t s = 0; s <= full; ++s) best = std::min(best, count_arcs(0, s));
      break;
    case SwitchKind::seidel:
      for (std::uint32_t s = 0; s <= full; ++s) best = std::min(best, count_arcs(s, s));
      break;
    case SwitchKind::gale_berlekamp:
      for (std::uint32_t o = 0; o <= full; ++o)
        for (std::uint32_t i = 0; i <= full; ++i) best = std::min(best, count_arcs(o, i));
      break;
  }
  return best;
}

struct BaselineTraversal {
  std::vector<VertexId> order;
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::optional<int>> level;  // BFS only
};

inline BaselineTraversal baseline_bfs(const Graph& g, VertexId source) {
  const int n = g.vertex_count();
  BaselineTraversal r;
  r.parent.assign(n, std::nullopt);
  r.level.assign(n, std::nullopt);
  std::queue<VertexId> q;
  q.push(source);
  r.level[source] = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    r.order.push_back(v);
    for (VertexId u : g.out_neighbors(v)) {
      if (!r.level[u].has_value()) {
        r.level[u] = *r.level[v] + 1;
        r.parent[u] = v;
        q.push(u);
      }
    }
  }
  return r;
}

inline BaselineTraversal baseline_dfs(const Graph& g, VertexId source) {
  const int n = g.vertex_count();
  BaselineTraversal r;
  r.parent.assign(n, std::nullopt);
  r.level.assign(n, std::nullopt);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  seen[source] = true;
  stack.emplace_back(source, 0);
  r.order.push_back(source);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& list = g.out_neighbors(v);
    if (i == list.size()) {
      stack.pop_back();
      continue;
    }
    VertexId u = list[i++];
    if (!seen[u]) {
      seen[u] = true;
      r.parent[u] = v;
      r.order.push_back(u);
      stack.emplace_back(u, 0);
    }
  }
  return r;
}

constexpr int kUnreachable = std::numeric_limits<int>::max();

// All-pairs shortest path lengths on unweighted arcs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) d[u][v] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (int j = 0; j < n; ++j) {
        if (d[k][j] == kUnreachable) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  return d;
}

// Component ids by union-find; symmetric graphs only.
inline std::vector<int> union_find_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) parent[find(u)] = find(v);
  // Normalize to the smallest member id per component.
  std::vector<int> id(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (id[root] < 0) id[root] = v;
  }
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = id[find(v)];
  return out;
}

// Explicit contraction of a family of disjoint vertex sets: members collapse,
// parallel edges merge, self-loops drop. Surviving vertices are renumbered by
// increasing representative (smallest member) id; the returned map sends old
// ids to new ids.
struct ContractionOracleResult {
  Graph graph;
  std::vector<VertexId> old_to_new;
};

inline ContractionOracleResult contract_oracle(const Graph& g,
                                               const std::vector<std::vector<VertexId>>& beta) {
  const int n = g.vertex_count();
  std::vector<VertexId> rep(n);
  for (VertexId v = 0; v < n; ++v) rep[v] = v;
  for (const auto& set : beta) {
    if (set.empty()) continue;
    VertexId least = *std::min_element(set.begin(), set.end());
    for (VertexId v : set) {
      if (v < 0 || v >= n) throw std::invalid_argument("contract_oracle: vertex out of range");
      if (rep[v] != v) throw std::invalid_argument("contract_oracle: overlapping sets");
      rep[v] = least;
    }
    rep[least] = least;
  }
  std::vector<VertexId> old_to_new(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (rep[v] == v) old_to_new[v] = next++;
  for (VertexId v = 0; v < n; ++v) old_to_new[v] = old_to_new[rep[v]];

  std::set<std::pair<VertexId, VertexId>> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u)) {
      VertexId nu = old_to_new[u], nv = old_to_new[v];
      if (nu != nv) arcs.insert({nu, nv});
    }
  Graph out(next, true);
  for (auto [u, v] : arcs) out.add_edge(u, v);
  out.finalize();
  return {std::move(out), std::move(old_to_new)};
}

// Maximum matching size by exhaustive search over edge subsets.
inline int max_matching_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("max_matching_bruteforce: n over cap");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  int best = 0;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    best = std::max(best, size);
    if (i == edges.size()) return;
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      self(self, i + 1, size + 1);
      used[u] = used[v] = false;
    }
    self(self, i + 1, size);
  };
  rec(rec, 0, 0);
  return best;
}

// Classic queue-based Edmonds blossom algorithm with per-vertex base arrays.
// Returns the mate vector; mate[v] == -1 when v is unmatched.
inline std::vector<VertexId> edmonds_matching(const Graph& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("edmonds_matching: needs a symmetric graph");
  const int n = g.vertex_count();
  std::vector<VertexId> match(n, -1), p(n, -1), base(n);
  std::vector<bool> used(n, false), blossom(n, false);

  auto lca = [&](int a, int b) {
    std::vector<bool> mark(n, false);
    for (;;) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = p[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  };

  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), false);
    std::fill(p.begin(), p.end(), -1);
    for (int v = 0; v < n; ++v) base[v] = v;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g.out_neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    while (u != -1) {
      int pv = p[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  return match;
}

inline int edmonds_matching_size(const Graph& g) {
  auto mate = edmonds_matching(g);
  int size = 0;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] >= 0 && static_cast<VertexId>(v) < mate[v]) ++size;
  return size;
}

// Maximum bipartite matching by Kuhn's augmenting-path algorithm over the
// explicit graph; sides[v] selects the left part.
inline int kuhn_bipartite_matching(const Graph& g, const std::vector<bool>& left) {
  const int n = g.vertex_count();
  std::vector<VertexId> mate(n, -1);
  std::vector<bool> seen(n, false);
  auto try_augment = [&](auto&& self, VertexId u) -> bool {
    for (VertexId v : g.out_neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      if (mate[v] == -1 || self(self, mate[v])) {
        mate[v] = u;
        mate[u] = v;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (!left[u] || mate[u] != -1) continue;
    std::fill(seen.begin(), seen.end(), false);
    if (try_augment(try_augment, u)) ++size;
  }
  return size;
}

}  // namespace pclist::oracles
