#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pclist {

using VertexId = std::int32_t;

/// Simple labeled digraph with per-vertex sorted out-neighbor lists.
/// Undirected graphs are stored as symmetric digraphs; values are immutable
/// once finalize() has run.
class Graph {
public:
  Graph() = default;
  Graph(int n, bool directed) : adjacency_(static_cast<std::size_t>(n)), directed_(directed) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  static Graph from_edges(int n, bool directed,
                          std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g(n, directed);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
  }

  // Adds the arc u->v; for undirected graphs also v->u. Only usable before
  // finalize().
  void add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    if (!directed_) adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }

  // Sorts and validates all lists. Duplicate arcs are rejected.
  void finalize() {
    arc_count_ = 0;
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw std::invalid_argument("Graph: duplicate edge");
      arc_count_ += static_cast<std::int64_t>(list.size());
    }
    finalized_ = true;
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  // Number of directed arcs; for symmetric graphs this is twice the number
  // of undirected edges.
  std::int64_t arc_count() const { return arc_count_; }
  bool directed() const { return directed_; }

  const std::vector<VertexId>& out_neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int out_degree(VertexId v) const { return static_cast<int>(out_neighbors(v).size()); }

  bool has_arc(VertexId u, VertexId v) const {
    const auto& list = out_neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool is_symmetric() const {
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : out_neighbors(u))
        if (!has_arc(v, u)) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<VertexId>> adjacency_;
  bool directed_ = true;
  bool finalized_ = false;
  std::int64_t arc_count_ = 0;
};

namespace detail {

// Portable uniform draws on top of mt19937_64: the standard distributions are
// implementation-defined, and generate() promises byte-identical output for
// identical seeds.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Deterministic instance generator parameters. Exactly one model is active;
/// the unused fields are ignored.
struct GenSpec {
  enum class Model {
    gnp,                            // G(n, p), undirected
    complement_of_sparse,           // complement of a sparse random graph
    unbalanced,                     // dense clique fraction + sparse fringe
    bipartite_gnp,                  // random bipartite, sides a and b
    bipartite_complement_matching,  // K_{k,k} minus a perfect matching
  };

  Model model = Model::gnp;
  int n = 0;                  // gnp / complement_of_sparse / unbalanced
  double p = 0.0;             // gnp / bipartite_gnp
  double avg_degree = 0.0;    // complement_of_sparse
  double dense_fraction = 0;  // unbalanced
  int a = 0, b = 0;           // bipartite_gnp
  int k = 0;                  // bipartite_complement_matching
  std::uint64_t seed = 0;
};

// Pure function of the spec: identical spec gives a byte-identical graph.
inline Graph generate(const GenSpec& spec) {
  using Model = GenSpec::Model;
  std::mt19937_64 rng(spec.seed);

  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("generate: ") + what);
  };

  switch (spec.model) {
    case Model::gnp: {
      require(spec.n > 0, "gnp needs n > 0");
      require(spec.p >= 0.0 && spec.p <= 1.0, "gnp needs 0 <= p <= 1");
      Graph g(spec.n, false);
      for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = u + 1; v < spec.n; ++v)
          if (detail::rand_unit(rng) < spec.p) g.add_edge(u, v);
      g.finalize();
      return g;
    }
    case Model::complement_of_sparse: {
      require(spec.n > 1, "complement_of_sparse needs n > 1");
      require(spec.avg_degree >= 0.0 && spec.avg_degree < spec.n,
              "complement_of_sparse needs 0 <= avg_degree < n");
      const auto n = static_cast<std::uint64_t>(spec.n);
      std::uint64_t target = static_cast<std::uint64_t>(spec.avg_degree * spec.n / 2.0);
      target = std::min(target, n * (n - 1) / 2);
      // Draw the sparse graph by rejection, then return its complement.
      std::vector<std::vector<bool>> sparse(n, std::vector<bool>(n, false));
      std::uint64_t placed = 0;
      while (placed < target) {
        auto u = static_cast<VertexId>(detail::rand_below(rng, n));
        auto v = static_cast<VertexId>(detail::rand_below(rng, n));
        if (u == v || sparse[u][v]) continue;
        sparse[u][v] = sparse[v][u] = true;
        ++placed;
      }
      Graph g(spec.n, false);
      for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = u + 1; v < spec.n; ++v)
          if (!sparse[u][v]) g.add_edge(u, v);
      g.finalize();
      return g;
    }
    case Model::unbalanced: {
      require(spec.n > 0, "unbalanced needs n > 0");
      require(spec.dense_fraction >= 0.0 && spec.dense_fraction <= 1.0,
              "unbalanced needs 0 <= dense_fraction <= 1");
      const int dense = static_cast<int>(
          std::min<double>(spec.n, std::ceil(spec.dense_fraction * spec.n)));
      Graph g(spec.n, false);
      std::vector<std::vector<bool>> present(spec.n, std::vector<bool>(spec.n, false));
      auto put = [&](VertexId u, VertexId v) {
        if (u == v || present[u][v]) return;
        present[u][v] = present[v][u] = true;
        g.add_edge(u, v);
      };
      // Vertices [0, dense) form a clique; the fringe gets two random edges
      // each, so degrees are either near n or near constant.
      for (VertexId u = 0; u < dense; ++u)
        for (VertexId v = u + 1; v < dense; ++v) put(u, v);
      for (VertexId u = dense; u < spec.n; ++u)
        for (int t = 0; t < 2 && spec.n > 1; ++t)
          put(u, static_cast<VertexId>(detail::rand_below(rng, spec.n)));
      g.finalize();
      return g;
    }
    case Model::bipartite_gnp: {
      require(spec.a > 0 && spec.b > 0, "bipartite_gnp needs a, b > 0");
      require(spec.p >= 0.0 && spec.p <= 1.0, "bipartite_gnp needs 0 <= p <= 1");
      Graph g(spec.a + spec.b, false);
      for (VertexId u = 0; u < spec.a; ++u)
        for (VertexId v = 0; v < spec.b; ++v)
          if (detail::rand_unit(rng) < spec.p) g.add_edge(u, spec.a + v);
      g.finalize();
      return g;
    }
    case Model::bipartite_complement_matching: {
      require(spec.k > 0, "bipartite_complement_matching needs k > 0");
      Graph g(2 * spec.k, false);
      for (VertexId u = 0; u < spec.k; ++u)
        for (VertexId v = 0; v < spec.k; ++v)
          if (u != v) g.add_edge(u, spec.k + v);
      g.finalize();
      return g;
    }
  }
  throw std::invalid_argument("generate: unknown model");
}

// Explicit complement; only used on the oracle side of dual-route checks.
inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n, true);
  for (VertexId u = 0; u < n; ++u) {
    const auto& list = g.out_neighbors(u);
    std::size_t i = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (i < list.size() && list[i] == v) {
        ++i;
        continue;
      }
      if (v != u) out.add_edge(u, v);
    }
  }
  out.finalize();
  return out;
}

struct DegreeStats {
  std::vector<int> out_degrees;
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.out_degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = g.out_degree(v);
    s.out_degrees.push_back(d);
    total += d;
  }
  if (!s.out_degrees.empty()) {
    s.min = *std::min_element(s.out_degrees.begin(), s.out_degrees.end());
    s.max = *std::max_element(s.out_degrees.begin(), s.out_degrees.end());
    s.mean = static_cast<double>(total) / static_cast<double>(s.out_degrees.size());
  }
  return s;
}

}  // namespace pclist
