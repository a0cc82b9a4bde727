#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "pclist/bench.hpp"
#include "pclist/edge_list_io.hpp"
#include "test_util.hpp"

using namespace pclist;
using namespace testutil;

namespace {

Graph round_trip(const Graph& g) {
  std::stringstream buffer;
  write_edge_list(buffer, g);
  return read_edge_list(buffer);
}

}  // namespace

TEST_CASE("edge list round trip") {
  CHECK(round_trip(complete_graph(4)) == complete_graph(4));
  CHECK(round_trip(directed_path(3)) == directed_path(3));
  CHECK(round_trip(empty_graph(5)) == empty_graph(5));

  std::mt19937_64 rng(179);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 20));
    Graph g = trial % 2 ? random_digraph(n, detail::rand_unit(rng), rng)
                        : random_undirected(n, detail::rand_unit(rng), rng);
    CHECK(round_trip(g) == g);
  }

  GenSpec spec;
  spec.model = GenSpec::Model::complement_of_sparse;
  spec.n = 50;
  spec.avg_degree = 3;
  spec.seed = 9;
  Graph dense = generate(spec);
  CHECK(round_trip(dense) == dense);
}

TEST_CASE("undirected files list each edge once") {
  std::stringstream buffer;
  write_edge_list(buffer, complete_graph(3));
  CHECK(buffer.str() == "3 3 u\n0 1\n0 2\n1 2\n");
}

TEST_CASE("edge list parse errors") {
  auto fails = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), EdgeListParseError);
  };
  fails("");                      // missing header
  fails("3 1 x\n0 1\n");          // bad flag
  fails("3 2 d\n0 1\n");          // truncated
  fails("3 1 d\n0 3\n");          // vertex out of range
  fails("3 1 d\n1 1\n");          // self loop
  fails("3 2 d\n0 1\n0 1\n");     // duplicate arc
  fails("2 2 u\n0 1\n1 0\n");     // undirected edge listed twice
  fails("2 1 u\n0 1\n1 0\n");     // trailing content
  fails("-1 0 d\n");              // negative count
}

TEST_CASE("windows line endings parse") {
  std::stringstream in("2 1 u\r\n0 1\r\n");
  CHECK(read_edge_list(in) == complete_graph(2));
}

TEST_CASE("bench csv schema is stable") {
  CHECK(std::string(bench::kCsvHeader) ==
        "instance,model,n,m,m_tilde,algo,impl,vertex_charge,pclist_element_charge,queue_op,"
        "ledger_misc,ledger_total,phases,wall_time_ns,result,seed");
  bench::BenchRow row;
  row.instance = "x";
  row.model = "gnp";
  row.n = 4;
  row.algo = "bfs";
  row.impl = "pclist";
  row.result = "4";
  std::stringstream out;
  bench::write_csv_row(out, row);
  int commas = 0;
  for (char c : out.str()) commas += c == ',';
  CHECK(commas == 15);  // 16 columns
}

TEST_CASE("bench rejects unknown suites and empty algo lists") {
  CHECK_THROWS_AS(bench::run_suite("nope", {"bfs"}, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench::run_suite("density-sweep", {}, 1), std::invalid_argument);
}

TEST_CASE("bench rows are deterministic for a fixed seed") {
  auto a = bench::run_suite("density-sweep", {"bfs"}, 4);
  auto b = bench::run_suite("density-sweep", {"bfs"}, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].instance == b[i].instance);
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].m_tilde == b[i].m_tilde);
    CHECK(a[i].ledger_total == b[i].ledger_total);
    CHECK(a[i].result == b[i].result);
  }
}
