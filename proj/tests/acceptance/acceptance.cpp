// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pclist/bench.hpp"
#include "pclist/contraction.hpp"
#include "pclist/edge_list_io.hpp"
#include "pclist/matching_bipartite.hpp"
#include "pclist/matching_general.hpp"
#include "pclist/oracles.hpp"
#include "pclist/reachability.hpp"
#include "pclist/traversal.hpp"

#ifndef PCL_CLI_PATH
#define PCL_CLI_PATH "pcl"
#endif

using namespace pclist;
namespace orc = pclist::oracles;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("C%d %s %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

Graph random_digraph(int n, double p, std::mt19937_64& rng) {
  Graph g(n, true);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && detail::rand_unit(rng) < p) g.add_edge(u, v);
  g.finalize();
  return g;
}

Graph random_undirected(int n, double p, std::mt19937_64& rng) {
  Graph g(n, false);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (detail::rand_unit(rng) < p) g.add_edge(u, v);
  g.finalize();
  return g;
}

Graph odd_cycles_with_pendants(int cycles, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int next = 0;
  for (int c = 0; c < cycles; ++c) {
    int len = 3 + 2 * static_cast<int>(detail::rand_below(rng, 3));
    int start = next;
    for (int i = 0; i < len; ++i) edges.emplace_back(start + i, start + (i + 1) % len);
    next += len;
    for (std::uint64_t t = 0; t < detail::rand_below(rng, 3); ++t) {
      edges.emplace_back(next, start + static_cast<int>(detail::rand_below(rng, len)));
      ++next;
    }
  }
  Graph g(next, false);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges)
    if (seen.insert({std::min(u, v), std::max(u, v)}).second) g.add_edge(u, v);
  g.finalize();
  return g;
}

// ---- C1: representative optimality ----
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(detail::rand_below(rng, 11));
    double p = 0.1 + 0.8 * (trial % 9) / 8.0;
    Graph g = trial % 2 ? random_digraph(n, p, rng) : random_undirected(n, p, rng);
    PCList rep = PCList::build_out_representative(g);
    if (rep.m_tilde() != orc::brute_min_representative(g, orc::SwitchKind::out)) ++mismatches;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  report(1, mismatches == 0 && elapsed < 60,
         "out-representative optimality on 500 graphs: " + std::to_string(mismatches) +
             " mismatches, " + std::to_string(elapsed) + "s");
}

// ---- C2: traversal equivalence ----
void criterion2() {
  std::mt19937_64 rng(2002);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 12));
    bool seidel = trial % 2 == 1;
    Graph g = seidel || trial % 4 == 0 ? random_undirected(n, detail::rand_unit(rng), rng)
                                       : random_digraph(n, detail::rand_unit(rng), rng);
    auto source = static_cast<VertexId>(detail::rand_below(rng, n));
    PCList p = seidel ? PCList::build_seidel(g, [&] {
      std::vector<VertexId> s;
      for (VertexId v = 0; v < n; ++v)
        if (detail::rand_unit(rng) < 0.5) s.push_back(v);
      return s;
    }())
                      : PCList::build_out_representative(g);
    PCList q = p;

    auto bfs = pclist_bfs(p, source);
    auto base = orc::baseline_bfs(g, source);
    for (VertexId v = 0; v < n; ++v) {
      int got = bfs.level[v].has_value() ? *bfs.level[v] : -1;
      int want = base.level[v].has_value() ? *base.level[v] : -1;
      if (got != want) ++mismatches;
    }

    auto dfs = pclist_dfs(q, source);
    auto reach = orc::baseline_dfs(g, source);
    std::set<VertexId> got(dfs.order.begin(), dfs.order.end());
    std::set<VertexId> want(reach.order.begin(), reach.order.end());
    if (got != want) ++mismatches;
    for (VertexId v = 0; v < n; ++v)
      if (dfs.parent[v].has_value() && !g.has_arc(*dfs.parent[v], v)) ++mismatches;
  }
  report(2, mismatches == 0,
         "BFS/DFS vs baseline on 1000 (graph, source) pairs incl. seidel: " +
             std::to_string(mismatches) + " mismatches");
}

// ---- C3: traversal work bound and scaling ----
void criterion3() {
  bool ok = true;
  std::ostringstream detail_text;
  std::uint64_t prev_total = 0;
  std::int64_t prev_m = 0;
  for (int n : {128, 256, 512, 1024}) {
    GenSpec spec;
    spec.model = GenSpec::Model::complement_of_sparse;
    spec.n = n;
    spec.avg_degree = 4;
    spec.seed = 33;
    Graph g = generate(spec);
    PCList p = PCList::build_out_representative(g);
    p.ledger().reset();
    pclist_bfs(p, 0);
    std::uint64_t total = p.ledger().total();
    std::uint64_t budget = 8 * static_cast<std::uint64_t>(n + p.m_tilde());
    if (total > budget) ok = false;
    if (prev_total) {
      double ratio = static_cast<double>(total) / static_cast<double>(prev_total);
      double m_ratio = static_cast<double>(g.arc_count()) / static_cast<double>(prev_m);
      if (ratio > 2.5 || m_ratio < 3.5) ok = false;
      detail_text << " n" << n << ":total=" << total << ",ratio=" << std::round(ratio * 100) / 100;
    } else {
      detail_text << " n" << n << ":total=" << total;
    }
    prev_total = total;
    prev_m = g.arc_count();
  }
  report(3, ok, "BFS ledger within 8(n+m~), doubling ratio <= 2.5, m ratio >= 3.5:" +
                    detail_text.str());
}

// ---- C4: diameter and closure vs Floyd-Warshall ----
void criterion4() {
  std::mt19937_64 rng(4004);
  int mismatches = 0;
  bool budget_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 64));
    Graph g = trial % 2 ? random_digraph(n, detail::rand_unit(rng), rng)
                        : random_undirected(n, detail::rand_unit(rng), rng);
    PCList p = PCList::build_out_representative(g);
    auto closure = transitive_closure(p);
    p.ledger().reset();
    auto d = diameter(p);
    std::uint64_t budget =
        8 * (static_cast<std::uint64_t>(n) * n + static_cast<std::uint64_t>(n) * p.m_tilde());
    if (p.ledger().total() > budget) budget_ok = false;
    auto dist = orc::floyd_warshall(g);
    bool infinite = false;
    int best = 0;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        bool reach = dist[u][v] != orc::kUnreachable;
        if (closure.get(u, v) != reach) ++mismatches;
        if (!reach)
          infinite = true;
        else
          best = std::max(best, dist[u][v]);
      }
    if (d.infinite != infinite || d.value != best) ++mismatches;
  }
  report(4, mismatches == 0 && budget_ok,
         "diameter/closure vs Floyd-Warshall on 200 instances: " + std::to_string(mismatches) +
             " mismatches, ledger within budget: " + (budget_ok ? "yes" : "no"));
}

// ---- C5: Hopcroft-Karp ----
void criterion5() {
  std::mt19937_64 rng(5005);
  int mismatches = 0;
  bool phase_ok = true, budget_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    int a = 1 + static_cast<int>(detail::rand_below(rng, 8));
    int b = 1 + static_cast<int>(detail::rand_below(rng, 8));
    Graph g(a + b, false);
    for (VertexId u = 0; u < a; ++u)
      for (VertexId v = 0; v < b; ++v)
        if (detail::rand_unit(rng) < detail::rand_unit(rng)) g.add_edge(u, a + v);
    g.finalize();
    BipartitePCList bp = BipartitePCList::build(g);
    auto r = hopcroft_karp(bp);
    std::vector<bool> left(a + b);
    for (int v = 0; v < a + b; ++v) left[v] = bp.side[v] == 0;
    if (r.matching.size != orc::kuhn_bipartite_matching(g, left)) ++mismatches;
    if (!is_valid_matching(g, r.matching)) ++mismatches;
    int n = a + b;
    if (r.phases > 2 * static_cast<int>(std::ceil(std::sqrt(n))) + 1) phase_ok = false;
  }
  // Phase bound on larger instances up to n = 512.
  for (int k : {64, 128, 256}) {
    GenSpec spec;
    spec.model = GenSpec::Model::bipartite_complement_matching;
    spec.k = k;
    Graph g = generate(spec);
    BipartitePCList bp = BipartitePCList::build(g);
    auto r = hopcroft_karp(bp);
    int n = 2 * k;
    if (r.matching.size != k) ++mismatches;
    if (r.phases > 2 * static_cast<int>(std::ceil(std::sqrt(n))) + 1) phase_ok = false;
    std::uint64_t budget = 8 * static_cast<std::uint64_t>(n + bp.pc.m_tilde());
    for (auto total : r.phase_ledger_totals)
      if (total > budget) budget_ok = false;
  }
  report(5, mismatches == 0 && phase_ok && budget_ok,
         "HK vs oracle on 1000 bipartite graphs: " + std::to_string(mismatches) +
             " mismatches; phase bound: " + (phase_ok ? "ok" : "violated") +
             "; per-phase ledger: " + (budget_ok ? "ok" : "violated"));
}

// ---- C6: general matching ----
void criterion6() {
  std::mt19937_64 rng(6006);
  int mismatches = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 8));
    Graph g = random_undirected(n, detail::rand_unit(rng), rng);
    Matching m = maximum_matching(g);
    if (m.size != orc::max_matching_bruteforce(g) || !is_valid_matching(g, m)) ++mismatches;
  }
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = trial % 3 == 2 ? odd_cycles_with_pendants(1 + trial % 5, rng)
                             : random_undirected(2 + static_cast<int>(detail::rand_below(rng, 63)),
                                                 detail::rand_unit(rng), rng);
    Matching m = maximum_matching(g);
    if (m.size != orc::edmonds_matching_size(g) || !is_valid_matching(g, m)) ++mismatches;
  }
  bool budget_ok = true;
  for (int n : {64, 128, 256}) {
    GenSpec spec;
    spec.model = GenSpec::Model::complement_of_sparse;
    spec.n = n;
    spec.avg_degree = 4;
    spec.seed = 66;
    Graph g = generate(spec);
    auto r = maximum_matching_detailed(g);
    if (r.matching.size != orc::edmonds_matching_size(g)) ++mismatches;
    std::uint64_t budget =
        8 * static_cast<std::uint64_t>(n + PCList::build_out_representative(g).m_tilde());
    for (auto total : r.find_ap_set_totals)
      if (total > budget) budget_ok = false;
  }
  report(6, mismatches == 0 && budget_ok,
         "general matching vs oracles on 2200 graphs: " + std::to_string(mismatches) +
             " mismatches; find_ap_set ledger: " + (budget_ok ? "ok" : "violated"));
}

// ---- C7: contraction ----
void criterion7() {
  std::mt19937_64 rng(7007);
  int mismatches = 0;
  bool budget_ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(detail::rand_below(rng, 11));
    Graph g = trial % 2 ? random_digraph(n, detail::rand_unit(rng), rng)
                        : random_undirected(n, detail::rand_unit(rng), rng);
    // Random disjoint family.
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < n; ++v)
      if (detail::rand_unit(rng) < 0.7) pool.push_back(v);
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[detail::rand_below(rng, i)]);
    std::vector<std::vector<VertexId>> beta;
    std::size_t i = 0;
    while (i < pool.size()) {
      std::size_t take = std::min(pool.size() - i, 1 + detail::rand_below(rng, 3));
      beta.emplace_back(pool.begin() + i, pool.begin() + i + take);
      i += take;
    }
    PCList p = PCList::build_out_representative(g);
    auto map = contract_partition(p, beta);
    auto oracle = orc::contract_oracle(g, beta);
    if (map != oracle.old_to_new || !(p.represented_graph() == oracle.graph)) ++mismatches;

    // contract_set budget on a fresh structure and a random non-empty set.
    if (!beta.empty()) {
      PCList q = PCList::build_out_representative(g);
      const auto& b = beta.front();
      std::uint64_t budget =
          8 * static_cast<std::uint64_t>(static_cast<std::int64_t>(b.size()) +
                                         incident_list_size(q, b));
      q.ledger().reset();
      contract_set(q, b);
      if (q.ledger().total() > budget) budget_ok = false;
    }
  }
  report(7, mismatches == 0 && budget_ok,
         "contraction vs oracle on 500 (graph, beta) pairs: " + std::to_string(mismatches) +
             " mismatches; contract_set ledger: " + (budget_ok ? "ok" : "violated"));
}

// ---- C8: end-to-end CLI ----

int run_cli(const std::string& args) {
  std::string cmd = std::string(PCL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

void criterion8() {
  fs::path dir = fs::temp_directory_path() / "pcl_acceptance";
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };

  auto write_graph = [&](const std::string& name, const Graph& g) {
    std::ofstream out(file(name));
    write_edge_list(out, g);
    return file(name);
  };
  auto write_switches = [&](const std::string& name, const std::vector<VertexId>& s) {
    std::ofstream out(file(name));
    for (VertexId v : s) out << v << '\n';
    return file(name);
  };

  std::mt19937_64 rng(8008);
  // Instance zoo.
  Graph p4(4, false);
  for (VertexId v = 0; v < 3; ++v) p4.add_edge(v, v + 1);
  p4.finalize();
  Graph c5(5, false);
  for (VertexId v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  c5.finalize();
  Graph c6(6, false);
  for (VertexId v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
  c6.finalize();
  Graph comp_p4 = complement(p4);
  Graph petersen(10, false);
  for (VertexId v = 0; v < 5; ++v) {
    petersen.add_edge(v, (v + 1) % 5);
    petersen.add_edge(v, v + 5);
    petersen.add_edge(v + 5, (v + 2) % 5 + 5);
  }
  petersen.finalize();
  Graph two_tri(6, true);
  for (VertexId v = 0; v < 3; ++v) two_tri.add_edge(v, (v + 1) % 3);
  for (VertexId v = 0; v < 3; ++v) two_tri.add_edge(3 + v, 3 + (v + 1) % 3);
  two_tri.add_edge(2, 3);
  two_tri.finalize();
  Graph rnd12 = random_undirected(12, 0.5, rng);
  Graph rnd30 = random_undirected(30, 0.3, rng);
  GenSpec cos;
  cos.model = GenSpec::Model::complement_of_sparse;
  cos.n = 40;
  cos.avg_degree = 4;
  cos.seed = 88;
  Graph dense40 = generate(cos);
  GenSpec bcm;
  bcm.model = GenSpec::Model::bipartite_complement_matching;
  bcm.k = 8;
  Graph kk8 = generate(bcm);
  GenSpec bgnp;
  bgnp.model = GenSpec::Model::bipartite_gnp;
  bgnp.a = 6;
  bgnp.b = 7;
  bgnp.p = 0.5;
  bgnp.seed = 99;
  Graph bip67 = generate(bgnp);
  Graph k33(6, false);
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 3; v < 6; ++v) k33.add_edge(u, v);
  k33.finalize();
  Graph k4(4, false);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  k4.finalize();
  Graph empty6(6, false);
  empty6.finalize();
  Graph two_comps(6, false);
  two_comps.add_edge(0, 1);
  two_comps.add_edge(1, 2);
  two_comps.add_edge(3, 4);
  two_comps.finalize();
  Graph c5_pendant(6, false);
  for (VertexId v = 0; v < 5; ++v) c5_pendant.add_edge(v, (v + 1) % 5);
  c5_pendant.add_edge(0, 5);
  c5_pendant.finalize();

  std::string swc5 = write_switches("sw_c5.txt", {0});
  std::string swc6 = write_switches("sw_c6.txt", {0, 2, 4});
  std::string swr = write_switches("sw_r12.txt", {1, 3, 5, 7});
  write_graph("rnd12.el", rnd12);

  struct Golden {
    std::string args;
  };
  std::vector<Golden> golden = {
      {"run --verify --algo bfs --input " + write_graph("p4.el", p4) + " --source 0"},
      {"run --verify --algo bfs --input " + write_graph("dense40.el", dense40) + " --source 3"},
      {"run --verify --algo bfs --repr seidel --switch-set " + swc5 + " --input " +
       write_graph("c5.el", c5) + " --source 1"},
      {"run --verify --algo dfs --input " + write_graph("comp_p4.el", comp_p4) + " --source 0"},
      {"run --verify --algo dfs --input " + write_graph("rnd30.el", rnd30) + " --source 5"},
      {"run --verify --algo dfs --repr seidel --switch-set " + swc6 + " --input " +
       write_graph("c6.el", c6) + " --source 0"},
      {"run --verify --algo components --input " + write_graph("two_comps.el", two_comps)},
      {"run --verify --algo components --input " + write_graph("empty6.el", empty6)},
      {"run --verify --algo components --repr seidel --switch-set " + swr + " --input " +
       file("rnd12.el")},
      {"run --verify --algo diameter --input " + file("p4.el")},
      {"run --verify --algo diameter --input " + write_graph("petersen.el", petersen)},
      {"run --verify --algo diameter --repr seidel --switch-set " + swc6 + " --input " +
       file("c6.el")},
      {"run --verify --algo tc --input " + write_graph("two_tri.el", two_tri)},
      {"run --verify --algo tc --input " + write_graph("k4.el", k4)},
      {"run --verify --algo tc --repr seidel --switch-set " + swr + " --input " + file("rnd12.el")},
      {"run --verify --algo hk --input " + write_graph("k33.el", k33)},
      {"run --verify --algo hk --input " + write_graph("kk8.el", kk8)},
      {"run --verify --algo hk --input " + write_graph("bip67.el", bip67)},
      {"run --verify --algo matching --input " + write_graph("c5p.el", c5_pendant)},
      {"run --verify --algo matching --input " + file("petersen.el")},
  };
  int cli_failures = 0;
  for (const auto& g : golden)
    if (run_cli(g.args) != 0) ++cli_failures;

  // Bench reproduces the scaling ratios from its own CSV.
  bool bench_ok = true;
  std::string size_csv = file("size_sweep.csv");
  std::string density_csv = file("density_sweep.csv");
  if (run_cli("bench --suite size-sweep --algos bfs --out " + size_csv + " --seed 7") != 0)
    bench_ok = false;
  if (run_cli("bench --suite density-sweep --algos diameter,matching --out " + density_csv +
              " --seed 7") != 0)
    bench_ok = false;

  auto parse_csv = [](const std::string& path) {
    std::vector<std::map<std::string, std::string>> rows;
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> header;
    bool first = true;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (first) {
        header = cells;
        first = false;
        continue;
      }
      std::map<std::string, std::string> row;
      for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i)
        row[header[i]] = cells[i];
      rows.push_back(std::move(row));
    }
    return rows;
  };

  if (bench_ok) {
    auto size_rows = parse_csv(size_csv);
    std::vector<double> totals, ms;
    for (auto& row : size_rows)
      if (row["impl"] == "pclist" && row["algo"] == "bfs") {
        totals.push_back(std::stod(row["ledger_total"]));
        ms.push_back(std::stod(row["m"]));
      }
    if (totals.size() != 4) bench_ok = false;
    for (std::size_t i = 1; i < totals.size() && bench_ok; ++i) {
      if (totals[i] / totals[i - 1] > 2.5) bench_ok = false;
      if (ms[i] / ms[i - 1] < 3.5) bench_ok = false;
    }
    auto density_rows = parse_csv(density_csv);
    std::vector<double> pc_totals, base_totals;
    bool phases_recorded = false;
    for (auto& row : density_rows) {
      if (row["algo"] == "diameter" && row["impl"] == "pclist")
        pc_totals.push_back(std::stod(row["ledger_total"]));
      if (row["algo"] == "diameter" && row["impl"] == "baseline")
        base_totals.push_back(std::stod(row["ledger_total"]));
      if (row["algo"] == "matching" && row["impl"] == "pclist" && std::stoi(row["phases"]) > 0)
        phases_recorded = true;
    }
    if (pc_totals.size() != 4 || base_totals.size() != 4) bench_ok = false;
    for (std::size_t i = 1; i < pc_totals.size() && bench_ok; ++i) {
      if (pc_totals[i] > pc_totals[i - 1]) bench_ok = false;       // non-increasing in p
      if (base_totals[i] <= base_totals[i - 1]) bench_ok = false;  // baseline grows
    }
    if (!phases_recorded) bench_ok = false;
  }

  report(8, cli_failures == 0 && bench_ok,
         "CLI golden suite (" + std::to_string(golden.size()) + " instances): " +
             std::to_string(cli_failures) + " failures; bench CSV ratios: " +
             (bench_ok ? "ok" : "violated"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria failed\n", failures);
  return failures;
}
