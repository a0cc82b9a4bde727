// pcl: generate graph instances, run pc-list algorithms with work-ledger
// instrumentation, and emit benchmark sweeps.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or file errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pclist/bench.hpp"
#include "pclist/edge_list_io.hpp"
#include "pclist/matching_bipartite.hpp"
#include "pclist/matching_general.hpp"
#include "pclist/oracles.hpp"
#include "pclist/reachability.hpp"
#include "pclist/traversal.hpp"

namespace {

using namespace pclist;
namespace orc = pclist::oracles;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  return read_edge_list(in);
}

std::vector<VertexId> load_switch_set(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open switch-set file: " + path);
  std::vector<VertexId> set;
  long long v;
  while (in >> v) {
    if (v < 0 || v >= n) throw UsageError("switch-set vertex out of range: " + std::to_string(v));
    set.push_back(static_cast<VertexId>(v));
  }
  return set;
}

void print_ledger(const WorkLedger& lg) {
  std::cout << "ledger";
  for (int c = 0; c < 4; ++c)
    std::cout << ' ' << kChargeNames[c] << '=' << lg.count(static_cast<Charge>(c));
  std::cout << " total=" << lg.total() << '\n';
}

std::string levels_line(const std::vector<int>& levels) {
  std::ostringstream out;
  for (std::size_t v = 0; v < levels.size(); ++v) out << (v ? " " : "") << levels[v];
  return out.str();
}

int run_gen(const GenSpec& spec, const std::string& out_path) {
  Graph g = generate(spec);
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  write_edge_list(out, g);
  std::cout << "wrote " << out_path << ": n=" << g.vertex_count() << " arcs=" << g.arc_count()
            << '\n';
  return 0;
}

struct RunOptions {
  std::string algo;
  std::string input;
  VertexId source = 0;
  std::string repr = "out";
  std::string switch_set_path;
  bool baseline = false;
  bool verify = false;
};

int run_algo(const RunOptions& opt) {
  Graph g = load_graph(opt.input);
  const int n = g.vertex_count();
  bool verified = false;
  std::string mismatch;

  auto require = [](bool ok, const std::string& why) {
    if (!ok) throw UsageError(why);
  };

  auto build_pclist = [&]() -> PCList {
    if (opt.repr == "seidel") {
      require(!opt.switch_set_path.empty(), "--repr seidel needs --switch-set");
      return PCList::build_seidel(g, load_switch_set(opt.switch_set_path, n));
    }
    require(opt.repr == "out", "unknown representation: " + opt.repr);
    return PCList::build_out_representative(g);
  };

  if (opt.algo == "bfs" || opt.algo == "dfs") {
    require(opt.source >= 0 && opt.source < n, "--source out of range");
    PCList p = build_pclist();
    std::int64_t m_tilde = p.m_tilde();
    p.ledger().reset();
    TraversalResult r = opt.algo == "bfs" ? pclist_bfs(p, opt.source) : pclist_dfs(p, opt.source);
    std::vector<int> levels(n, -1);
    for (VertexId v = 0; v < n; ++v)
      if (r.level[v].has_value()) levels[v] = *r.level[v];

    if (opt.verify) {
      auto base = opt.algo == "bfs" ? orc::baseline_bfs(g, opt.source)
                                    : orc::baseline_dfs(g, opt.source);
      std::vector<bool> got(n, false), want(n, false);
      for (VertexId v : r.order) got[v] = true;
      for (VertexId v : base.order) want[v] = true;
      for (VertexId v = 0; v < n && mismatch.empty(); ++v) {
        if (got[v] != want[v]) mismatch = "visit set differs at vertex " + std::to_string(v);
        if (opt.algo == "bfs") {
          int want_level = base.level[v].has_value() ? *base.level[v] : -1;
          if (levels[v] != want_level)
            mismatch = "level differs at vertex " + std::to_string(v) + ": got " +
                       std::to_string(levels[v]) + " want " + std::to_string(want_level);
        }
        if (r.parent[v].has_value() && !g.has_arc(*r.parent[v], v))
          mismatch = "parent edge missing for vertex " + std::to_string(v);
      }
      verified = mismatch.empty();
    }
    std::cout << opt.algo << ' ' << r.order.size() << (verified ? "; verified" : "") << '\n';
    std::cout << "m " << g.arc_count() << "\nm_tilde " << m_tilde << '\n';
    if (opt.algo == "bfs") std::cout << "levels " << levels_line(levels) << '\n';
    print_ledger(p.ledger());
    if (opt.baseline) {
      auto bl = bench::run_baseline_algo(opt.algo, g, opt.source);
      std::cout << "baseline " << opt.algo << ' ' << bl.result << '\n';
      std::cout << "baseline_ops " << bl.ops << '\n';
      if (opt.algo == "bfs") std::cout << "baseline_levels " << levels_line(bl.levels) << '\n';
    }
  } else if (opt.algo == "components") {
    PCList p = build_pclist();
    std::int64_t m_tilde = p.m_tilde();
    p.ledger().reset();
    auto ids = connected_components(p);
    std::int64_t comps = 0;
    for (VertexId v = 0; v < n; ++v) comps += ids[v] == v ? 1 : 0;
    if (opt.verify) {
      if (ids != orc::union_find_components(g)) mismatch = "component ids differ";
      verified = mismatch.empty();
    }
    std::cout << "components " << comps << (verified ? "; verified" : "") << '\n';
    std::cout << "m " << g.arc_count() << "\nm_tilde " << m_tilde << '\n';
    print_ledger(p.ledger());
    if (opt.baseline) {
      auto bl = bench::run_baseline_algo(opt.algo, g, 0);
      std::cout << "baseline components " << bl.result << "\nbaseline_ops " << bl.ops << '\n';
    }
  } else if (opt.algo == "diameter" || opt.algo == "tc") {
    PCList p = build_pclist();
    std::int64_t m_tilde = p.m_tilde();
    p.ledger().reset();
    std::string headline;
    if (opt.algo == "diameter") {
      auto d = diameter(p);
      headline = d.infinite ? "inf" : std::to_string(d.value);
      if (opt.verify) {
        auto dist = orc::floyd_warshall(g);
        bool infinite = false;
        int best = 0;
        for (auto& row : dist)
          for (int x : row) {
            if (x == orc::kUnreachable)
              infinite = true;
            else
              best = std::max(best, x);
          }
        std::string want = infinite ? "inf" : std::to_string(best);
        if (headline != want) mismatch = "diameter: got " + headline + " want " + want;
        verified = mismatch.empty();
      }
    } else {
      auto closure = transitive_closure(p);
      headline = std::to_string(closure.popcount());
      if (opt.verify) {
        auto dist = orc::floyd_warshall(g);
        for (VertexId u = 0; u < n && mismatch.empty(); ++u)
          for (VertexId v = 0; v < n; ++v)
            if (closure.get(u, v) != (dist[u][v] != orc::kUnreachable)) {
              mismatch = "closure differs at (" + std::to_string(u) + "," + std::to_string(v) + ")";
              break;
            }
        verified = mismatch.empty();
      }
    }
    std::cout << opt.algo << ' ' << headline << (verified ? "; verified" : "") << '\n';
    std::cout << "m " << g.arc_count() << "\nm_tilde " << m_tilde << '\n';
    print_ledger(p.ledger());
    if (opt.baseline) {
      auto bl = bench::run_baseline_algo(opt.algo, g, 0);
      std::cout << "baseline " << opt.algo << ' ' << bl.result << "\nbaseline_ops " << bl.ops
                << '\n';
    }
  } else if (opt.algo == "hk" || opt.algo == "matching") {
    require(opt.repr == "out", "matching algorithms use the out representation");
    int size = 0;
    if (opt.algo == "hk") {
      BipartitePCList bp = [&] {
        try {
          return BipartitePCList::build(g);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      std::int64_t m_tilde = bp.pc.m_tilde();
      auto r = hopcroft_karp(bp);
      size = r.matching.size;
      if (opt.verify) {
        std::vector<bool> left(n);
        for (VertexId v = 0; v < n; ++v) left[v] = bp.side[v] == 0;
        int want = orc::kuhn_bipartite_matching(g, left);
        if (size != want)
          mismatch = "matching size: got " + std::to_string(size) + " want " + std::to_string(want);
        if (!is_valid_matching(g, r.matching)) mismatch = "matching invalid";
        verified = mismatch.empty();
      }
      std::cout << "matching " << size << (verified ? "; verified" : "") << '\n';
      std::cout << "m " << g.arc_count() << "\nm_tilde " << m_tilde << '\n';
      std::cout << "phases " << r.phases << '\n';
      print_ledger(bp.pc.ledger());
    } else {
      if (!g.is_symmetric()) throw UsageError("matching needs an undirected input graph");
      auto r = maximum_matching_detailed(g);
      size = r.matching.size;
      if (opt.verify) {
        int want = orc::edmonds_matching_size(g);
        if (size != want)
          mismatch = "matching size: got " + std::to_string(size) + " want " + std::to_string(want);
        if (!is_valid_matching(g, r.matching)) mismatch = "matching invalid";
        verified = mismatch.empty();
      }
      std::cout << "matching " << size << (verified ? "; verified" : "") << '\n';
      std::cout << "m " << g.arc_count() << "\nm_tilde "
                << PCList::build_out_representative(g).m_tilde() << '\n';
      std::cout << "phases " << r.phases << '\n';
      print_ledger(r.ledger);
    }
    if (opt.baseline) {
      auto bl = bench::run_baseline_algo(opt.algo, g, 0);
      std::cout << "baseline matching " << bl.result << "\nbaseline_ops " << bl.ops << '\n';
    }
  } else {
    throw UsageError("unknown algorithm: " + opt.algo);
  }

  if (opt.verify && !mismatch.empty()) {
    std::cerr << "verify mismatch: " << mismatch << '\n';
    return 1;
  }
  return 0;
}

int run_bench(const std::string& suite, const std::string& algos_csv, const std::string& out_path,
              std::uint64_t seed) {
  std::vector<std::string> algos;
  std::stringstream ss(algos_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) algos.push_back(item);
  if (algos.empty()) throw UsageError("bench: empty algorithm list");

  auto rows = bench::run_suite(suite, algos, seed);
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << bench::kCsvHeader << '\n';
  for (const auto& row : rows) bench::write_csv_row(out, row);
  std::cout << "wrote " << out_path << ": " << rows.size() << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pc-list graph algorithms"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph instance");
  std::string model, out_path;
  GenSpec spec;
  int gen_n = 0, gen_a = 0, gen_b = 0, gen_k = 0;
  double gen_p = -1, gen_avg = -1, gen_fraction = -1;
  std::uint64_t gen_seed = 0;
  gen->add_option("--model", model, "gnp | complement_of_sparse | unbalanced | bipartite_gnp | "
                                    "bipartite_complement_matching")
      ->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--avg-degree", gen_avg, "sparse average degree");
  gen->add_option("--fraction", gen_fraction, "dense fraction");
  gen->add_option("--a", gen_a, "left side size (bipartite_gnp)");
  gen->add_option("--b", gen_b, "right side size (bipartite_gnp)");
  gen->add_option("--k", gen_k, "side size (bipartite_complement_matching)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("-o,--out", out_path, "output edge-list file")->required();

  // run
  auto* run = app.add_subcommand("run", "run an algorithm on an edge-list file");
  RunOptions ropt;
  run->add_option("--algo", ropt.algo, "bfs|dfs|components|diameter|tc|hk|matching")->required();
  run->add_option("--input", ropt.input, "edge-list file")->required();
  run->add_option("--source", ropt.source, "source vertex (bfs/dfs)");
  run->add_option("--repr", ropt.repr, "out|seidel");
  run->add_option("--switch-set", ropt.switch_set_path, "switch-set file for --repr seidel");
  run->add_flag("--baseline", ropt.baseline, "also run the plain adjacency-list version");
  run->add_flag("--verify", ropt.verify, "check the result against the oracle");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark sweep");
  std::string suite, algos_csv, bench_out;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--suite", suite, "density-sweep|size-sweep")->required();
  bench_cmd->add_option("--algos", algos_csv, "comma-separated algorithm list")->required();
  bench_cmd->add_option("--out", bench_out, "output CSV file")->required();
  bench_cmd->add_option("--seed", bench_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (model == "gnp") {
        spec.model = GenSpec::Model::gnp;
        spec.n = gen_n;
        spec.p = gen_p;
      } else if (model == "complement_of_sparse") {
        spec.model = GenSpec::Model::complement_of_sparse;
        spec.n = gen_n;
        spec.avg_degree = gen_avg;
      } else if (model == "unbalanced") {
        spec.model = GenSpec::Model::unbalanced;
        spec.n = gen_n;
        spec.dense_fraction = gen_fraction;
      } else if (model == "bipartite_gnp") {
        spec.model = GenSpec::Model::bipartite_gnp;
        spec.a = gen_a ? gen_a : gen_n / 2;
        spec.b = gen_b ? gen_b : gen_n - gen_n / 2;
        spec.p = gen_p;
      } else if (model == "bipartite_complement_matching") {
        spec.model = GenSpec::Model::bipartite_complement_matching;
        spec.k = gen_k ? gen_k : gen_n / 2;
      } else {
        throw UsageError("unknown model: " + model);
      }
      spec.seed = gen_seed;
      return run_gen(spec, out_path);
    }
    if (run->parsed()) return run_algo(ropt);
    if (bench_cmd->parsed()) return run_bench(suite, algos_csv, bench_out, bench_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EdgeListParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
