#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "twdp/graph.hpp"

using namespace twdp;

TEST_CASE("build_graph constructs paths, isolated vertices and cycles") {
  Graph p = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  auto n1 = p.neighbors(1);
  CHECK(std::vector<Vertex>(n1.begin(), n1.end()) == std::vector<Vertex>{0, 2});

  Graph single = build_graph(1, std::span<const Edge>{});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("build_graph rejects malformed edges") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), MalformedInput);
  CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), MalformedInput);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), MalformedInput);
}

TEST_CASE("adjacency is symmetric and sums to twice the edge count") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + static_cast<int>(rng() % 15);
    std::vector<Edge> e;
    for (int i = 0; i < 2 * n; ++i) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) e.emplace_back(u, v);
    }
    Graph g = build_graph(n, e);
    std::size_t degree_sum = 0;
    for (int u = 0; u < n; ++u) {
      degree_sum += g.neighbors(u).size();
      for (Vertex v : g.neighbors(u)) CHECK(g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("build_graph is idempotent under permutation and duplication of edges") {
  std::mt19937_64 rng(11);
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}};
  Graph reference = build_graph(5, e);
  for (int round = 0; round < 20; ++round) {
    std::vector<Edge> shuffled = e;
    for (const auto& [u, v] : e) {
      if (rng() % 2) shuffled.emplace_back(v, u);
    }
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Graph g = build_graph(5, shuffled);
    CHECK(g == reference);
    CHECK(g.edge_count() == reference.edge_count());
  }
}

TEST_CASE("modular arithmetic wraps") {
  const ModValue top = ModValue::from_int(1'000'000'006);
  CHECK(mod_add(top, ModValue::from_int(1)).residue() == 0);
  CHECK(mod_sub(ModValue{}, ModValue::from_int(1)).residue() == 1'000'000'006u);
  CHECK(mod_mul(ModValue::from_int(2), ModValue::from_int(3)).residue() == 6);
  CHECK(ModValue::from_int(-1).residue() == 1'000'000'006u);
  CHECK(mod_mul(top, top).residue() == 1);
}

TEST_CASE("set_weight sums and reduces") {
  WeightMap w = {5, 7, 9};
  CHECK(set_weight(std::vector<Vertex>{}, w).residue() == 0);
  CHECK(set_weight(std::vector<Vertex>{0, 2}, w).residue() == 14);

  WeightMap heavy(94, kMaxWeight);
  std::vector<Vertex> all(94);
  std::iota(all.begin(), all.end(), 0);
  CHECK(set_weight(all, heavy).residue() == 9'400'000u);
}

TEST_CASE("set_weight agrees with plain integer summation") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 60);
    WeightMap w(n);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % 2'000'000'000'000ULL);
    std::vector<Vertex> s;
    unsigned __int128 exact = 0;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) {
        s.push_back(v);
        exact += static_cast<unsigned __int128>(w[v]);
      }
    }
    CHECK(set_weight(s, w).residue() == static_cast<std::uint32_t>(exact % ModValue::kModulus));
  }
}
