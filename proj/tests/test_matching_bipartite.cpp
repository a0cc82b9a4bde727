#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <queue>
#include <set>

#include "pclist/matching_bipartite.hpp"
#include "pclist/oracles.hpp"
#include "test_util.hpp"

using namespace pclist;
using namespace testutil;
namespace orc = pclist::oracles;

namespace {

Graph complete_bipartite(int a, int b) {
  Graph g(a + b, false);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v) g.add_edge(u, a + v);
  g.finalize();
  return g;
}

Graph kk_minus_matching(int k) {
  GenSpec spec;
  spec.model = GenSpec::Model::bipartite_complement_matching;
  spec.k = k;
  return generate(spec);
}

Graph random_bipartite(int a, int b, double p, std::mt19937_64& rng) {
  Graph g(a + b, false);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v)
      if (detail::rand_unit(rng) < p) g.add_edge(u, a + v);
  g.finalize();
  return g;
}

std::vector<bool> left_mask(const BipartitePCList& bp) {
  std::vector<bool> left(bp.vertex_count());
  for (int v = 0; v < bp.vertex_count(); ++v) left[v] = bp.side[v] == 0;
  return left;
}

// Alternating-level BFS on the explicit graph, truncated at the first
// unmatched B level; the reference for bfs_star's level partition.
std::vector<int> baseline_alternating_levels(const Graph& g, const std::vector<std::uint8_t>& side,
                                             const Matching& m, int* k_out) {
  const int n = g.vertex_count();
  std::vector<int> level(n, -1);
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n; ++v)
    if (!side[v] && !m.matched(v)) {
      level[v] = 1;
      q.push(v);
    }
  int k = -1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (k >= 0 && level[v] > k) break;
    if (side[v]) {
      if (!m.matched(v)) {
        if (k < 0) k = level[v];
        continue;
      }
      VertexId w = m.mate[v];
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push(w);
      }
    } else {
      for (VertexId u : g.out_neighbors(v))
        if (level[u] < 0) {
          level[u] = level[v] + 1;
          q.push(u);
        }
    }
  }
  *k_out = k;
  if (k >= 0)
    for (VertexId v = 0; v < n; ++v)
      if (level[v] > k) level[v] = -1;
  if (k < 0) level.assign(n, -1);
  return level;
}

}  // namespace

TEST_CASE("bipartite representative switches dense vertices") {
  Graph g = kk_minus_matching(8);
  BipartitePCList bp = BipartitePCList::build(g);
  for (VertexId v = 0; v < 16; ++v) CHECK(bp.pc.switched(v));
  CHECK(bp.pc.m_tilde() == 16);  // one stored non-neighbor per vertex
  CHECK(bp.represented_graph() == g);
}

TEST_CASE("bipartite build rejects odd cycles") {
  CHECK_THROWS_AS(BipartitePCList::build(cycle_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(BipartitePCList::build(directed_path(3)), std::invalid_argument);
}

TEST_CASE("bfs_star levels on K22 with an empty matching") {
  BipartitePCList bp = BipartitePCList::build(complete_bipartite(2, 2));
  Matching m(4);
  LevelPartition l = bfs_star(bp, m);
  REQUIRE_FALSE(l.empty());
  CHECK(l.k == 2);
  CHECK(l.level_of == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("bfs_star returns the empty partition at a maximum matching") {
  BipartitePCList bp = BipartitePCList::build(complete_bipartite(2, 2));
  Matching m(4);
  m.add_edge(0, 2);
  m.add_edge(1, 3);
  LevelPartition l = bfs_star(bp, m);
  CHECK(l.empty());
}

TEST_CASE("bfs_star levels match the explicit alternating BFS") {
  Graph g = kk_minus_matching(3);
  BipartitePCList bp = BipartitePCList::build(g);
  Matching m(6);
  m.add_edge(0, 4);  // a0 matched to b1
  LevelPartition l = bfs_star(bp, m);
  int k = -2;
  auto expected = baseline_alternating_levels(g, bp.side, m, &k);
  CHECK(l.k == k);
  CHECK(l.level_of == expected);
}

TEST_CASE("bfs_star levels match on random instances and matchings") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 120; ++trial) {
    int a = 1 + static_cast<int>(detail::rand_below(rng, 8));
    int b = 1 + static_cast<int>(detail::rand_below(rng, 8));
    Graph g = random_bipartite(a, b, detail::rand_unit(rng), rng);
    BipartitePCList bp = BipartitePCList::build(g, [&] {
      std::vector<std::uint8_t> side(a + b, 0);
      for (int v = a; v < a + b; ++v) side[v] = 1;
      return side;
    }());
    // Grow a partial greedy matching to randomize the phase state.
    Matching m(a + b);
    for (VertexId v = 0; v < a; ++v)
      if (detail::rand_unit(rng) < 0.5)
        for (VertexId u : g.out_neighbors(v))
          if (!m.matched(v) && !m.matched(u)) m.add_edge(v, u);
    int k = -2;
    auto expected = baseline_alternating_levels(g, bp.side, m, &k);
    LevelPartition l = bfs_star(bp, m);
    CHECK(l.k == k);
    CHECK(l.level_of == expected);
  }
}

TEST_CASE("dfs_star on the empty partition finds nothing") {
  BipartitePCList bp = BipartitePCList::build(complete_bipartite(2, 2));
  Matching m(4);
  m.add_edge(0, 2);
  m.add_edge(1, 3);
  LevelPartition l = bfs_star(bp, m);
  REQUIRE(l.empty());
  CHECK(dfs_star(bp, l, m).empty());
}

TEST_CASE("dfs_star finds the single edge of K11") {
  BipartitePCList bp = BipartitePCList::build(complete_bipartite(1, 1));
  Matching m(2);
  LevelPartition l = bfs_star(bp, m);
  radix_sort_levels(bp, l);
  auto paths = dfs_star(bp, l, m);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<VertexId>{0, 1});
}

TEST_CASE("dfs_star finds three disjoint paths in K33") {
  BipartitePCList bp = BipartitePCList::build(complete_bipartite(3, 3));
  Matching m(6);
  LevelPartition l = bfs_star(bp, m);
  radix_sort_levels(bp, l);
  auto paths = dfs_star(bp, l, m);
  REQUIRE(paths.size() == 3);
  std::set<VertexId> used;
  for (const auto& path : paths) {
    CHECK(path.size() == 2);
    for (VertexId v : path) CHECK(used.insert(v).second);
  }
}

TEST_CASE("phase paths are vertex-disjoint shortest paths") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 80; ++trial) {
    int a = 1 + static_cast<int>(detail::rand_below(rng, 8));
    int b = 1 + static_cast<int>(detail::rand_below(rng, 8));
    Graph g = random_bipartite(a, b, detail::rand_unit(rng), rng);
    BipartitePCList bp = BipartitePCList::build(g);
    Matching m(a + b);
    // Run a couple of real phases and inspect each.
    for (int phase = 0; phase < 3; ++phase) {
      BipartitePCList work = bp;
      LevelPartition l = bfs_star(work, m);
      if (l.empty()) break;
      int k = l.k;
      radix_sort_levels(work, l);
      auto paths = dfs_star(work, l, m);
      REQUIRE(!paths.empty());
      std::set<VertexId> used;
      for (const auto& path : paths) {
        CHECK(static_cast<int>(path.size()) == k);
        for (VertexId v : path) CHECK(used.insert(v).second);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.has_arc(path[i], path[i + 1]));
        CHECK_FALSE(m.matched(path.front()));
        CHECK_FALSE(m.matched(path.back()));
        for (std::size_t i = 1; i + 1 < path.size(); i += 2) CHECK(m.mate[path[i]] == path[i + 1]);
      }
      for (const auto& path : paths) m.augment(path);
    }
  }
}

TEST_CASE("hopcroft_karp basics") {
  CHECK(hopcroft_karp(complete_bipartite(3, 3)).size == 3);
  CHECK(hopcroft_karp(empty_graph(6)).size == 0);
  Graph g = kk_minus_matching(8);
  BipartitePCList bp = BipartitePCList::build(g);
  for (VertexId v = 0; v < 16; ++v) REQUIRE(bp.pc.switched(v));
  auto r = hopcroft_karp(bp);
  CHECK(r.matching.size == 8);
  CHECK(is_valid_matching(g, r.matching));
}

TEST_CASE("hopcroft_karp equals the oracle on random bipartite graphs") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 400; ++trial) {
    int a = 1 + static_cast<int>(detail::rand_below(rng, 8));
    int b = 1 + static_cast<int>(detail::rand_below(rng, 8));
    Graph g = random_bipartite(a, b, detail::rand_unit(rng), rng);
    BipartitePCList bp = BipartitePCList::build(g);
    auto r = hopcroft_karp(bp);
    CHECK(is_valid_matching(g, r.matching));
    CHECK(r.matching.size == orc::kuhn_bipartite_matching(g, left_mask(bp)));
    int n = a + b;
    CHECK(r.phases <= 2 * static_cast<int>(std::ceil(std::sqrt(n))) + 1);
  }
}

TEST_CASE("phase count bound on larger instances") {
  for (int k : {16, 64, 128}) {
    Graph g = kk_minus_matching(k);
    BipartitePCList bp = BipartitePCList::build(g);
    auto r = hopcroft_karp(bp);
    CHECK(r.matching.size == k);
    int n = 2 * k;
    CHECK(r.phases <= 2 * static_cast<int>(std::ceil(std::sqrt(n))) + 1);
  }
}

TEST_CASE("per-phase work bound on dense bipartite instances") {
  for (int k : {16, 32, 64}) {
    Graph g = kk_minus_matching(k);
    BipartitePCList bp = BipartitePCList::build(g);
    const std::int64_t n = 2 * k;
    const std::int64_t m_tilde = bp.pc.m_tilde();
    REQUIRE(m_tilde == n);  // m is quadratic, the representative is linear
    auto r = hopcroft_karp(bp);
    REQUIRE(r.matching.size == k);
    for (auto total : r.phase_ledger_totals)
      CHECK(total <= static_cast<std::uint64_t>(8 * (n + m_tilde)));
  }
}
