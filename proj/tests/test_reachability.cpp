#include <catch2/catch_amalgamated.hpp>

#include "pclist/oracles.hpp"
#include "pclist/reachability.hpp"
#include "test_util.hpp"

using namespace pclist;
using namespace testutil;
namespace orc = pclist::oracles;

namespace {

ReachMatrix closure_oracle(const Graph& g) {
  auto dist = orc::floyd_warshall(g);
  ReachMatrix m(g.vertex_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (dist[u][v] != orc::kUnreachable) m.set(u, v);
  return m;
}

DiameterResult diameter_oracle(const Graph& g) {
  auto dist = orc::floyd_warshall(g);
  DiameterResult r;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (dist[u][v] == orc::kUnreachable)
        r.infinite = true;
      else
        r.value = std::max(r.value, dist[u][v]);
    }
  return r;
}

}  // namespace

TEST_CASE("diameter basics") {
  PCList p4 = PCList::build_out_representative(path_graph(4));
  auto d = diameter(p4);
  CHECK_FALSE(d.infinite);
  CHECK(d.value == 3);

  for (int n : {2, 5, 9}) {
    PCList kn = PCList::build_out_representative(complete_graph(n));
    auto dk = diameter(kn);
    CHECK_FALSE(dk.infinite);
    CHECK(dk.value == 1);
  }

  PCList petersen = PCList::build_out_representative(petersen_graph());
  CHECK(diameter(petersen).value == 2);
  auto oracle = diameter_oracle(petersen_graph());
  CHECK(oracle.value == 2);
}

TEST_CASE("diameter rejects empty graphs") {
  PCList p = PCList::build_out_representative(empty_graph(0));
  CHECK_THROWS_AS(diameter(p), std::invalid_argument);
}

TEST_CASE("transitive closure of a directed path") {
  PCList p = PCList::build_out_representative(directed_path(3));
  auto m = transitive_closure(p);
  CHECK(m.get(0, 0));
  CHECK(m.get(0, 1));
  CHECK(m.get(0, 2));
  CHECK(m.get(1, 1));
  CHECK(m.get(1, 2));
  CHECK_FALSE(m.get(1, 0));
  CHECK_FALSE(m.get(2, 0));
  CHECK_FALSE(m.get(2, 1));
  CHECK(m.popcount() == 6);
}

TEST_CASE("transitive closure of K4 is all ones") {
  PCList p = PCList::build_out_representative(complete_graph(4));
  CHECK(transitive_closure(p).popcount() == 16);
}

TEST_CASE("two directed triangles joined by one arc") {
  Graph g(6, true);
  for (VertexId v = 0; v < 3; ++v) g.add_edge(v, (v + 1) % 3);
  for (VertexId v = 0; v < 3; ++v) g.add_edge(3 + v, 3 + (v + 1) % 3);
  g.add_edge(2, 3);
  g.finalize();
  PCList p = PCList::build_out_representative(g);
  CHECK(transitive_closure(p) == closure_oracle(g));
  auto d = diameter(p);
  auto od = diameter_oracle(g);
  CHECK(d.infinite == od.infinite);
  CHECK(d.infinite);
  CHECK(d.value == od.value);
}

TEST_CASE("eccentricities") {
  PCList p3 = PCList::build_out_representative(path_graph(3));
  CHECK(eccentricities(p3).value == std::vector<int>{2, 1, 2});

  PCList k4 = PCList::build_out_representative(complete_graph(4));
  CHECK(eccentricities(k4).value == std::vector<int>{1, 1, 1, 1});

  PCList star = PCList::build_out_representative(star_graph(4));
  auto ecc = eccentricities(star);
  CHECK(ecc.value == std::vector<int>{1, 2, 2, 2, 2});
  for (bool flag : ecc.reaches_all) CHECK(flag);
}

TEST_CASE("oracle equivalence on random instances") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 64));
    double density = detail::rand_unit(rng);
    Graph g = trial % 2 ? random_digraph(n, density, rng) : random_undirected(n, density, rng);
    PCList p = PCList::build_out_representative(g);
    CHECK(transitive_closure(p) == closure_oracle(g));
    auto d = diameter(p);
    auto od = diameter_oracle(g);
    CHECK(d.infinite == od.infinite);
    CHECK(d.value == od.value);
  }
}

TEST_CASE("oracle equivalence in seidel mode") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 32));
    Graph g = random_undirected(n, detail::rand_unit(rng), rng);
    auto s = random_subset(n, 0.5, rng);
    PCList p = PCList::build_seidel(g, s);
    CHECK(transitive_closure(p) == closure_oracle(g));
    CHECK(diameter(p).value == diameter_oracle(g).value);
  }
}

TEST_CASE("closing the closure changes nothing") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(detail::rand_below(rng, 12));
    Graph g = random_digraph(n, detail::rand_unit(rng), rng);
    PCList p = PCList::build_out_representative(g);
    auto closed = transitive_closure(p);
    Graph closure_graph(n, true);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (u != v && closed.get(u, v)) closure_graph.add_edge(u, v);
    closure_graph.finalize();
    PCList q = PCList::build_out_representative(closure_graph);
    CHECK(transitive_closure(q) == closed);
  }
}

TEST_CASE("diameter work bound stays within budget") {
  std::mt19937_64 rng(101);
  for (int n : {16, 32, 64}) {
    GenSpec spec;
    spec.model = GenSpec::Model::complement_of_sparse;
    spec.n = n;
    spec.avg_degree = 4;
    spec.seed = rng();
    Graph g = generate(spec);
    PCList p = PCList::build_out_representative(g);
    REQUIRE(p.m_tilde() <= 4 * n);
    std::int64_t budget = 8 * (std::int64_t(n) * n + std::int64_t(n) * p.m_tilde());
    p.ledger().reset();
    diameter(p);
    CHECK(p.ledger().total() <= static_cast<std::uint64_t>(budget));
  }
}
