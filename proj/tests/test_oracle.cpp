#include <doctest.h>

#include "support.hpp"
#include "twdp/oracle.hpp"

using namespace twdp;
using namespace twdp::testing;

namespace {

VertexMask mask(std::initializer_list<Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= VertexMask{1} << v;
  return m;
}

VertexMask full(int n) { return (VertexMask{1} << n) - 1; }

}  // namespace

TEST_CASE("dominating set examples") {
  Graph p3 = path_graph(3);
  CHECK(is_dominating(p3, mask({1})));
  CHECK_FALSE(is_dominating(p3, mask({0})));
  CHECK(is_dominating(p3, mask({0, 2})));
  CHECK_FALSE(is_dominating(p3, 0));
  CHECK(is_dominating(build_graph(0, std::span<const Edge>{}), 0));
}

TEST_CASE("connected >= k examples") {
  Graph c5 = cycle_graph(5);
  CHECK(is_connected_ge_k(path_graph(4), full(4)));
  CHECK_FALSE(is_connected_ge_k(complete_graph(3), full(3)));
  CHECK(is_connected_ge_k(c5, mask({0, 1, 2, 3})));
  CHECK(is_connected_ge_k(c5, mask({3, 4, 0, 1})));
  CHECK_FALSE(is_connected_ge_k(cycle_graph(6), mask({0, 1, 3, 4})));
  CHECK_FALSE(is_connected_ge_k(path_graph(5), 0));
  CHECK(is_connected_ge_k(path_graph(5), mask({2}), 1));
  CHECK_FALSE(is_connected_ge_k(path_graph(5), mask({0, 2}), 1));
}

TEST_CASE("cograph examples") {
  CHECK_FALSE(is_cograph(path_graph(4), full(4)));
  CHECK(is_cograph(path_graph(4), mask({0, 1, 2})));
  CHECK(is_cograph(cycle_graph(4), full(4)));
  CHECK_FALSE(is_cograph(cycle_graph(5), full(5)));
  CHECK(is_cograph(complete_graph(5), full(5)));
  CHECK(is_cograph(path_graph(4), 0));
}

TEST_CASE("bipartite, triangle-free and odd cycles") {
  CHECK(is_bipartite(cycle_graph(6), full(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5), full(5)));
  CHECK(has_odd_cycle(cycle_graph(7), full(7)));
  CHECK_FALSE(has_odd_cycle(cycle_graph(8), full(8)));
  CHECK_FALSE(triangle_free(complete_graph(3), full(3)));
  CHECK(triangle_free(cycle_graph(4), full(4)));
}

TEST_CASE("bipartite agrees with the odd-cycle search on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < graph_count(n); ++code) {
      Graph g = graph_from_code(n, code);
      const VertexMask all = full(n);
      REQUIRE(is_bipartite(g, all) == !has_odd_cycle(g, all));
    }
  }
}

TEST_CASE("the two cluster formulations agree on every induced subgraph with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < graph_count(n); ++code) {
      Graph g = graph_from_code(n, code);
      for (VertexMask s = 0; s <= full(n); ++s) REQUIRE(is_cluster(g, s) == is_union_of_cliques(g, s));
    }
  }
}

TEST_CASE("maximal cluster graph examples") {
  Graph p3 = path_graph(3);
  CHECK(is_maximal_cluster(p3, mask({0, 1})));
  CHECK(is_maximal_cluster(p3, mask({0, 2})));
  CHECK_FALSE(is_maximal_cluster(p3, mask({0})));
  CHECK_FALSE(is_maximal_cluster(p3, full(3)));
  CHECK(is_maximal_cluster(complete_graph(3), full(3)));
  CHECK_FALSE(is_maximal_cluster(complete_graph(3), mask({0, 1})));
}

TEST_CASE("induced C4 examples") {
  CHECK_FALSE(c4_free(cycle_graph(4), full(4)));
  CHECK(c4_free(complete_graph(4), full(4)));
  CHECK(c4_free(cycle_graph(5), full(5)));
  Graph diamond = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(c4_free(diamond, full(4)));
  CHECK(predicate_for("induced-c4-free")(cycle_graph(6), mask({0, 1, 2, 3})));
}

TEST_CASE("brute force keeps the exact sum next to the residue") {
  const int n = 18;
  Graph g = build_graph(n, std::span<const Edge>{});
  WeightMap w(n, kMaxWeight);
  OracleResult r = wmc_bruteforce(g, w, [](const Graph&, VertexMask) { return true; });
  const unsigned __int128 expected = static_cast<unsigned __int128>(1u << (n - 1)) * n * kMaxWeight;
  CHECK(r.exact == expected);
  CHECK(r.value.residue() == static_cast<std::uint32_t>(expected % ModValue::kModulus));
  CHECK(r.accepted == (std::uint64_t{1} << n));
  CHECK(to_string(r.exact) == "235929600000");
}

TEST_CASE("brute force reports infeasibility and the empty set") {
  OracleResult none = wmc_bruteforce(path_graph(3), {1, 1, 1}, [](const Graph&, VertexMask) { return false; });
  CHECK_FALSE(none.feasible);
  OracleResult empty = wmc_bruteforce(path_graph(3), {1, 1, 1}, [](const Graph&, VertexMask s) { return s == 0; });
  CHECK(empty.feasible);
  CHECK(empty.exact == 0);
  CHECK(empty.accepted == 1);
}

TEST_CASE("brute force refuses graphs above the bound") {
  Graph g = build_graph(kOracleMaxVertices + 1, std::span<const Edge>{});
  WeightMap w(kOracleMaxVertices + 1, 1);
  CHECK_THROWS_AS(wmc_bruteforce(g, w, predicate_for("cograph")), OracleTooLarge);
}

TEST_CASE("predicate registry") {
  CHECK(oracle_ids().size() == 6);
  for (const auto& id : oracle_ids()) CHECK(predicate_for(id));
  CHECK_THROWS(predicate_for("nope"));
  CHECK(to_string(static_cast<unsigned __int128>(0)) == "0");
}
