#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pclist/matching_bipartite.hpp"
#include "pclist/matching_general.hpp"
#include "pclist/reachability.hpp"
#include "pclist/traversal.hpp"

// Benchmark sweeps: configured instance grids, pc-list runs with ledger
// readings, instrumented plain-adjacency baselines, CSV rows.
namespace pclist::bench {

inline constexpr const char* kCsvHeader =
    "instance,model,n,m,m_tilde,algo,impl,vertex_charge,pclist_element_charge,queue_op,"
    "ledger_misc,ledger_total,phases,wall_time_ns,result,seed";

struct BenchRow {
  std::string instance;
  std::string model;
  int n = 0;
  std::int64_t m = 0;
  std::int64_t m_tilde = 0;
  std::string algo;
  std::string impl;  // pclist or baseline
  std::uint64_t vertex_charge = 0, pclist_element_charge = 0, queue_op = 0, ledger_misc = 0;
  std::uint64_t ledger_total = 0;
  int phases = 0;
  std::int64_t wall_time_ns = 0;
  std::string result;
  std::uint64_t seed = 0;
};

inline void write_csv_row(std::ostream& out, const BenchRow& r) {
  out << r.instance << ',' << r.model << ',' << r.n << ',' << r.m << ',' << r.m_tilde << ','
      << r.algo << ',' << r.impl << ',' << r.vertex_charge << ',' << r.pclist_element_charge
      << ',' << r.queue_op << ',' << r.ledger_misc << ',' << r.ledger_total << ',' << r.phases
      << ',' << r.wall_time_ns << ',' << r.result << ',' << r.seed << '\n';
}

// ---- instrumented plain-adjacency baselines ----
// Operation counts: one unit per queue/stack event plus one per adjacency
// entry scanned, mirroring what the ledger charges on the pc-list side.

struct BaselineOutcome {
  std::uint64_t ops = 0;
  std::string result;
  std::vector<int> levels;  // BFS only
};

inline BaselineOutcome baseline_bfs_ops(const Graph& g, VertexId source) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  out.levels.assign(n, -1);
  std::vector<VertexId> queue{source};
  out.levels[source] = 0;
  std::size_t head = 0;
  int reached = 0;
  while (head < queue.size()) {
    VertexId v = queue[head++];
    ++out.ops;
    ++reached;
    for (VertexId u : g.out_neighbors(v)) {
      ++out.ops;
      if (out.levels[u] < 0) {
        out.levels[u] = out.levels[v] + 1;
        queue.push_back(u);
      }
    }
  }
  out.result = std::to_string(reached);
  return out;
}

inline BaselineOutcome baseline_dfs_ops(const Graph& g, VertexId source) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  std::vector<bool> seen(n, false);
  std::vector<std::pair<VertexId, std::size_t>> stack{{source, 0}};
  seen[source] = true;
  int reached = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i == g.out_neighbors(v).size()) {
      ++out.ops;
      stack.pop_back();
      continue;
    }
    VertexId u = g.out_neighbors(v)[i++];
    ++out.ops;
    if (!seen[u]) {
      seen[u] = true;
      ++reached;
      stack.emplace_back(u, 0);
    }
  }
  out.result = std::to_string(reached);
  return out;
}

inline BaselineOutcome baseline_components_ops(const Graph& g) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  std::vector<bool> seen(n, false);
  int comps = 0;
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++comps;
    seen[root] = true;
    queue.assign(1, root);
    std::size_t head = 0;
    while (head < queue.size()) {
      VertexId v = queue[head++];
      ++out.ops;
      for (VertexId u : g.out_neighbors(v)) {
        ++out.ops;
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  out.result = std::to_string(comps);
  return out;
}

inline BaselineOutcome baseline_diameter_ops(const Graph& g) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  bool infinite = false;
  int best = 0;
  for (VertexId s = 0; s < n; ++s) {
    auto one = baseline_bfs_ops(g, s);
    out.ops += one.ops + static_cast<std::uint64_t>(n);
    for (int level : one.levels) {
      if (level < 0)
        infinite = true;
      else
        best = std::max(best, level);
    }
  }
  out.result = infinite ? "inf" : std::to_string(best);
  return out;
}

inline BaselineOutcome baseline_tc_ops(const Graph& g) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  std::int64_t reachable = 0;
  for (VertexId s = 0; s < n; ++s) {
    auto one = baseline_bfs_ops(g, s);
    out.ops += one.ops + static_cast<std::uint64_t>(n);
    for (int level : one.levels)
      if (level >= 0) ++reachable;
  }
  out.result = std::to_string(reachable);
  return out;
}

inline BaselineOutcome baseline_hk_ops(const Graph& g, const std::vector<std::uint8_t>& side) {
  const int n = g.vertex_count();
  BaselineOutcome out;
  std::vector<VertexId> mate(n, -1);
  std::vector<bool> seen(n, false);
  auto try_augment = [&](auto&& self, VertexId v) -> bool {
    ++out.ops;
    for (VertexId u : g.out_neighbors(v)) {
      ++out.ops;
      if (seen[u]) continue;
      seen[u] = true;
      if (mate[u] == -1 || self(self, mate[u])) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v] || mate[v] != -1) continue;
    std::fill(seen.begin(), seen.end(), false);
    out.ops += static_cast<std::uint64_t>(n);
    if (try_augment(try_augment, v)) ++size;
  }
  out.result = std::to_string(size);
  return out;
}

inline BaselineOutcome baseline_matching_ops(const Graph& g) {
  // Classic queue-based blossom search over the explicit adjacency.
  const int n = g.vertex_count();
  BaselineOutcome out;
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
      ++out.ops;
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), false);
    std::fill(p.begin(), p.end(), -1);
    for (int v = 0; v < n; ++v) base[v] = v;
    out.ops += static_cast<std::uint64_t>(n);
    used[root] = true;
    std::vector<int> q{root};
    std::size_t head = 0;
    while (head < q.size()) {
      int v = q[head++];
      ++out.ops;
      for (int to : g.out_neighbors(v)) {
        ++out.ops;
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
                q.push_back(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          q.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    if (u == -1) continue;
    ++size;
    while (u != -1) {
      int pv = p[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  out.result = std::to_string(size);
  return out;
}

// ---- pc-list runs ----

struct PclistOutcome {
  WorkLedger ledger;
  std::string result;
  std::int64_t m_tilde = 0;
  int phases = 0;
  std::vector<int> levels;
};

inline PclistOutcome run_pclist_algo(const std::string& algo, const Graph& g, VertexId source) {
  PclistOutcome out;
  if (algo == "hk") {
    BipartitePCList bp = BipartitePCList::build(g);
    out.m_tilde = bp.pc.m_tilde();
    auto r = hopcroft_karp(bp);
    out.ledger = bp.pc.ledger().snapshot();
    out.result = std::to_string(r.matching.size);
    out.phases = r.phases;
    return out;
  }
  if (algo == "matching") {
    auto r = maximum_matching_detailed(g);
    out.m_tilde = PCList::build_out_representative(g).m_tilde();
    out.ledger = r.ledger;
    out.result = std::to_string(r.matching.size);
    out.phases = r.phases;
    return out;
  }

  PCList p = PCList::build_out_representative(g);
  out.m_tilde = p.m_tilde();
  p.ledger().reset();
  if (algo == "bfs") {
    auto r = pclist_bfs(p, source);
    out.result = std::to_string(r.order.size());
    out.levels.assign(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (r.level[v].has_value()) out.levels[v] = *r.level[v];
  } else if (algo == "dfs") {
    auto r = pclist_dfs(p, source);
    out.result = std::to_string(r.order.size());
  } else if (algo == "components") {
    auto ids = connected_components(p);
    std::int64_t comps = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) comps += ids[v] == v ? 1 : 0;
    out.result = std::to_string(comps);
  } else if (algo == "diameter") {
    auto d = diameter(p);
    out.result = d.infinite ? "inf" : std::to_string(d.value);
  } else if (algo == "tc") {
    out.result = std::to_string(transitive_closure(p).popcount());
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  out.ledger = p.ledger().snapshot();
  return out;
}

inline BaselineOutcome run_baseline_algo(const std::string& algo, const Graph& g,
                                         VertexId source) {
  if (algo == "bfs") return baseline_bfs_ops(g, source);
  if (algo == "dfs") return baseline_dfs_ops(g, source);
  if (algo == "components") return baseline_components_ops(g);
  if (algo == "diameter") return baseline_diameter_ops(g);
  if (algo == "tc") return baseline_tc_ops(g);
  if (algo == "hk") {
    BipartitePCList bp = BipartitePCList::build(g);  // sides only
    return baseline_hk_ops(g, bp.side);
  }
  if (algo == "matching") return baseline_matching_ops(g);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

// ---- suites ----

struct BenchInstance {
  std::string id;
  std::string model;
  Graph graph;
  std::uint64_t seed = 0;
};

// hk needs bipartite input, so it gets a bipartite analog of each grid point.
inline Graph suite_graph(const std::string& suite, const std::string& algo, int n, double p,
                         std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  if (suite == "density-sweep") {
    if (algo == "hk") {
      spec.model = GenSpec::Model::bipartite_gnp;
      spec.a = n / 2;
      spec.b = n - n / 2;
      spec.p = p;
    } else {
      spec.model = GenSpec::Model::gnp;
      spec.n = n;
      spec.p = p;
    }
  } else if (suite == "size-sweep") {
    if (algo == "hk") {
      spec.model = GenSpec::Model::bipartite_complement_matching;
      spec.k = n / 2;
    } else {
      spec.model = GenSpec::Model::complement_of_sparse;
      spec.n = n;
      spec.avg_degree = 4;
    }
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return generate(spec);
}

inline std::vector<BenchRow> run_suite(const std::string& suite,
                                       const std::vector<std::string>& algos,
                                       std::uint64_t base_seed) {
  if (algos.empty()) throw std::invalid_argument("bench: empty algorithm list");
  struct Point {
    int n;
    double p;
    std::string tag;
  };
  std::vector<Point> grid;
  if (suite == "density-sweep") {
    for (double p : {0.5, 0.7, 0.9, 0.99})
      grid.push_back({256, p, "n256_p" + std::to_string(p).substr(2, 2)});
  } else if (suite == "size-sweep") {
    for (int n : {128, 256, 512, 1024})
      grid.push_back({n, 0.0, "n" + std::to_string(n)});
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }

  std::vector<BenchRow> rows;
  int index = 0;
  for (const auto& pt : grid) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(index++);
    for (const auto& algo : algos) {
      Graph g = suite_graph(suite, algo, pt.n, pt.p, seed);
      std::string model = suite == "density-sweep" ? (algo == "hk" ? "bipartite_gnp" : "gnp")
                                                   : (algo == "hk" ? "bipartite_complement_matching"
                                                                   : "complement_of_sparse");
      BenchRow row;
      row.instance = suite + "_" + pt.tag;
      row.model = model;
      row.n = g.vertex_count();
      row.m = g.arc_count();
      row.algo = algo;
      row.seed = seed;

      auto t0 = std::chrono::steady_clock::now();
      auto pc = run_pclist_algo(algo, g, 0);
      auto t1 = std::chrono::steady_clock::now();
      row.impl = "pclist";
      row.m_tilde = pc.m_tilde;
      row.vertex_charge = pc.ledger.count(Charge::vertex);
      row.pclist_element_charge = pc.ledger.count(Charge::pclist_element);
      row.queue_op = pc.ledger.count(Charge::queue_op);
      row.ledger_misc = pc.ledger.count(Charge::misc);
      row.ledger_total = pc.ledger.total();
      row.phases = pc.phases;
      row.wall_time_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      row.result = pc.result;
      rows.push_back(row);

      auto b0 = std::chrono::steady_clock::now();
      auto bl = run_baseline_algo(algo, g, 0);
      auto b1 = std::chrono::steady_clock::now();
      BenchRow brow = row;
      brow.impl = "baseline";
      brow.vertex_charge = brow.pclist_element_charge = brow.queue_op = brow.ledger_misc = 0;
      brow.ledger_total = bl.ops;
      brow.phases = 0;
      brow.wall_time_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(b1 - b0).count();
      brow.result = bl.result;
      rows.push_back(brow);
    }
  }
  return rows;
}

}  // namespace pclist::bench
