#include <doctest.h>

#include <bit>

#include "support.hpp"
#include "twdp/engine.hpp"
#include "twdp/generator.hpp"
#include "twdp/solvers.hpp"

using namespace twdp;
using namespace twdp::testing;

namespace {

std::uint64_t insert_slot(std::uint64_t mask, int pos) {
  const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
  return (mask & low) | ((mask & ~low) << 1);
}

std::uint64_t erase_slot(std::uint64_t mask, int pos) {
  const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
  return (mask & low) | ((mask >> 1) & ~low);
}

ModValue key_weight(const BagView& view, std::uint64_t key) {
  ModValue total;
  for (int p = 0; p < view.size(); ++p)
    if ((key >> p) & 1u) total += view.weight_at(p);
  return total;
}

/// Accepts every subset; the profile is the selected part of the bag.
SolverCallbacks all_subsets_solver() {
  SolverCallbacks cb;
  cb.name = "all-subsets";
  cb.introduce = [](const BagView& view, const DPTable& child, Vertex v) {
    const int p = view.position(v);
    DPTable out(view.vertices());
    for (const auto& [key, agg] : child) {
      const std::uint64_t open = insert_slot(key, p);
      out.add(open, agg);
      out.add(open | (std::uint64_t{1} << p), with_vertex(agg, view.weight_at(p)));
    }
    return out;
  };
  cb.leaf = [intro = cb.introduce](const BagView& view) {
    DPTable unit{Bag{}};
    unit.add(0, Aggregate{ModValue::from_int(1), ModValue{}});
    if (view.size() == 0) return unit;
    return intro(view, unit, view.vertex_at(0));
  };
  cb.forget = [](const BagView& view, const DPTable& child, Vertex v) {
    const int p = view.position(v);
    Bag rest = view.vertices();
    rest.erase(rest.begin() + p);
    DPTable out(rest);
    for (const auto& [key, agg] : child) out.add(erase_slot(key, p), agg);
    return out;
  };
  cb.join = [](const BagView& view, const DPTable& a, const DPTable& b) {
    DPTable out(view.vertices());
    for (const auto& [key, agg] : a)
      if (const Aggregate* other = b.find(key)) out.add(key, join_aggregate(agg, *other, key_weight(view, key)));
    return out;
  };
  cb.extract = [](const DPTable& root) -> std::optional<Aggregate> {
    const Aggregate* agg = root.find(0);
    if (!agg) return std::nullopt;
    return *agg;
  };
  return cb;
}

ModValue pow2(int e) {
  ModValue r = ModValue::from_int(1);
  for (int i = 0; i < e; ++i) r = r + r;
  return r;
}

RunResult run_td(const Graph& g, const WeightMap& w, const TreeDecomposition& td, const SolverCallbacks& cb) {
  return run(to_nice(td, g), g, w, cb);
}

}  // namespace

TEST_CASE("empty graph has answer zero with one (empty) solution") {
  Graph g = build_graph(0, std::span<const Edge>{});
  RunResult r = run_td(g, {}, TreeDecomposition{}, all_subsets_solver());
  REQUIRE(r.feasible());
  CHECK(r.root->count == ModValue::from_int(1));
  CHECK(r.answer() == ModValue{});
}

TEST_CASE("single vertex of weight 7") {
  Graph g = build_graph(1, std::span<const Edge>{});
  RunResult r = run_td(g, {7}, single_bag(1), all_subsets_solver());
  CHECK(r.root->count == ModValue::from_int(2));
  CHECK(r.answer() == ModValue::from_int(7));
}

TEST_CASE("all subsets: count 2^n, weight 2^(n-1) times the total weight") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + static_cast<int>(seed % 60);
    cfg.width = 3;
    cfg.join_cap = 3;
    cfg.join_density = 0.3;
    cfg.seed = seed;
    Instance inst = sample_instance(cfg);
    RunResult r = run_td(inst.graph, inst.weights, inst.td, all_subsets_solver());
    ModValue total;
    for (auto w : inst.weights) total += ModValue::from_int(w);
    REQUIRE(r.feasible());
    CHECK(r.root->count == pow2(cfg.n));
    CHECK(r.answer() == pow2(cfg.n - 1) * total);
  }
}

TEST_CASE("join at an empty bag multiplies the two sides") {
  Graph g = build_graph(2, std::span<const Edge>{});
  TreeDecomposition td{{{}, {0}, {1}}, {{0, 1}, {0, 2}}, 0};
  NiceDecomposition nd = to_nice(td, g);
  RunResult r = run(nd, g, {3, 5}, all_subsets_solver());
  CHECK(r.stats.nodes[static_cast<int>(NiceKind::kJoin)] == 1);
  CHECK(r.root->count == ModValue::from_int(4));
  CHECK(r.answer() == ModValue::from_int(2 * (3 + 5)));
}

TEST_CASE("an isolated vertex doubles the dominating-set count only through itself") {
  Graph g = path_graph(3);
  RunResult base = run_td(g, {1, 1, 1}, path_decomposition(3), dominating_set_solver());
  Graph g2 = build_graph(4, {{0, 1}, {1, 2}});
  TreeDecomposition td = path_decomposition(3);
  td.bags.push_back({3});
  td.tree_edges.emplace_back(1, 2);
  RunResult with_isolated = run_td(g2, {1, 1, 1, 1}, td, dominating_set_solver());
  CHECK(base.root->count == with_isolated.root->count);
  CHECK(with_isolated.answer() == base.answer() + base.root->count);
}

TEST_CASE("join_aggregate counts the shared bag weight once") {
  Aggregate a{ModValue::from_int(2), ModValue::from_int(2 * 5 + 3)};
  Aggregate b{ModValue::from_int(3), ModValue::from_int(3 * 5 + 4 + 6 + 7)};
  Aggregate j = join_aggregate(a, b, ModValue::from_int(5));
  CHECK(j.count == ModValue::from_int(6));
  CHECK(j.weight == ModValue::from_int(6 * 5 + 3 * 3 + 2 * (4 + 6 + 7)));
}

TEST_CASE("stats count every nice node") {
  GenConfig cfg = preset("standard");
  cfg.seed = 3;
  Instance inst = sample_instance(cfg);
  NiceDecomposition nd = to_nice(inst.td, inst.graph);
  RunResult r = run(nd, inst.graph, inst.weights, all_subsets_solver());
  std::size_t total = 0;
  for (auto c : r.stats.nodes) total += c;
  CHECK(total == nd.nodes.size());
  CHECK(r.stats.max_rows == 16);
}

TEST_CASE("callbacks asking outside their bag raise OutsideBagError") {
  SolverCallbacks cb = all_subsets_solver();
  cb.introduce = [](const BagView& view, const DPTable&, Vertex) {
    (void)view.position(99);
    return DPTable(view.vertices());
  };
  Graph g = path_graph(3);
  CHECK_THROWS_AS(run_td(g, {1, 1, 1}, path_decomposition(3), cb), OutsideBagError);
}

TEST_CASE("tables keyed on the wrong bag raise EngineContractError") {
  SolverCallbacks cb = all_subsets_solver();
  auto original = cb.forget;
  cb.forget = [original](const BagView& view, const DPTable& child, Vertex v) {
    (void)original(view, child, v);
    return DPTable(view.vertices());
  };
  Graph g = path_graph(3);
  CHECK_THROWS_AS(run_td(g, {1, 1, 1}, path_decomposition(3), cb), EngineContractError);
}

TEST_CASE("run rejects invalid nice decompositions and mismatched weights") {
  Graph g = path_graph(3);
  NiceDecomposition nd = to_nice(path_decomposition(3), g);
  CHECK_THROWS_AS(run(nd, g, {1, 1}, all_subsets_solver()), MalformedInput);
  nd.root = 0;
  CHECK_THROWS_AS(run(nd, g, {1, 1, 1}, all_subsets_solver()), InvalidDecomposition);
}

TEST_CASE("BagView exposes bag-local adjacency and weights") {
  Graph g = build_graph(5, {{0, 2}, {2, 4}, {1, 3}});
  BagView view(g, {10, 11, 12, 13, 14}, {0, 2, 4});
  CHECK(view.size() == 3);
  CHECK(view.contains(2));
  CHECK_FALSE(view.contains(1));
  CHECK(view.position(4) == 2);
  CHECK(view.adjacent(0, 2));
  CHECK_FALSE(view.adjacent(0, 4));
  CHECK(view.neighbor_mask(1) == 0b101);
  CHECK(view.weight(4) == 14);
  CHECK(view.local_edges() == std::vector<Edge>{{0, 2}, {2, 4}});
  CHECK_THROWS_AS(view.weight(1), OutsideBagError);
}
