#include "twdp/generator.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "twdp/engine.hpp"

namespace twdp {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return lo + static_cast<std::int64_t>(engine_() % span);
}

// ---------------------------------------------------------------- configs

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"warmup", "standard", "stress"};
  return names;
}

GenConfig preset(std::string_view name) {
  GenConfig cfg;
  if (name == "warmup") {
    cfg.n = 12;
    cfg.width = 2;
    cfg.join_cap = 2;
  } else if (name == "standard") {
    cfg.n = 94;
    cfg.width = 3;
    cfg.join_cap = 2;
  } else if (name == "stress") {
    cfg.n = 50000;
    cfg.width = 3;
    cfg.join_cap = 2;
    cfg.join_density = 0.05;
  } else {
    throw std::invalid_argument("unknown preset: " + std::string(name));
  }
  return cfg;
}

GenConfig load_config(const std::string& name_or_path) {
  for (const auto& p : preset_names()) {
    if (p == name_or_path) return preset(p);
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("no preset or readable config file named " + name_or_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(name_or_path + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument(name_or_path + ": expected a JSON object");
  GenConfig cfg = preset(j.value("base", std::string("standard")));
  for (const auto& [key, value] : j.items()) {
    if (key == "base") continue;
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "width") cfg.width = value.get<int>();
    else if (key == "join_cap") cfg.join_cap = value.get<int>();
    else if (key == "join_density") cfg.join_density = value.get<double>();
    else if (key == "edge_density") cfg.edge_density = value.get<double>();
    else if (key == "forget_bias") cfg.forget_bias = value.get<double>();
    else if (key == "min_weight") cfg.min_weight = value.get<std::int64_t>();
    else if (key == "max_weight") cfg.max_weight = value.get<std::int64_t>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else throw std::invalid_argument(name_or_path + ": unknown config key '" + key + "'");
  }
  return cfg;
}

std::string describe(const GenConfig& cfg) {
  nlohmann::json j = {{"n", cfg.n},
                      {"width", cfg.width},
                      {"join_cap", cfg.join_cap},
                      {"join_density", cfg.join_density},
                      {"edge_density", cfg.edge_density},
                      {"forget_bias", cfg.forget_bias},
                      {"min_weight", cfg.min_weight},
                      {"max_weight", cfg.max_weight},
                      {"seed", cfg.seed}};
  return j.dump();
}

// ---------------------------------------------------------------- contraction

namespace {

bool subset_of(const Bag& a, const Bag& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Bag sorted(Bag b) {
  std::sort(b.begin(), b.end());
  return b;
}

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

/// Contracts every edge for which `want` returns true and one endpoint's
/// bag contains the other's; repeats until nothing changes.
TreeDecomposition contract_where(const TreeDecomposition& td,
                                 const std::function<bool(int, int)>& want) {
  const int count = static_cast<int>(td.bags.size());
  std::vector<int> rep(count);
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
  std::vector<Bag> bags;
  for (const auto& b : td.bags) bags.push_back(sorted(b));
  std::vector<bool> contracted(td.tree_edges.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
      if (contracted[i]) continue;
      const int a = find(td.tree_edges[i].first);
      const int b = find(td.tree_edges[i].second);
      if (a == b) continue;
      const bool ab = subset_of(bags[a], bags[b]);
      const bool ba = subset_of(bags[b], bags[a]);
      if (!(ab || ba) || !want(a, b)) continue;
      // Keep the smaller index as representative so node 0 stays first.
      const int keep = std::min(a, b);
      const int drop = std::max(a, b);
      bags[keep] = ab ? bags[b] : bags[a];
      rep[drop] = keep;
      contracted[i] = true;
      changed = true;
    }
  }
  std::vector<int> index(count, -1);
  TreeDecomposition out;
  for (int i = 0; i < count; ++i) {
    if (find(i) == i) {
      index[i] = static_cast<int>(out.bags.size());
      out.bags.push_back(bags[i]);
    }
  }
  for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
    if (contracted[i]) continue;
    out.tree_edges.push_back(
        ordered(index[find(td.tree_edges[i].first)], index[find(td.tree_edges[i].second)]));
  }
  if (td.root) out.root = index[find(*td.root)];
  return out;
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.bags.size());
  for (const auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void require_valid(const TreeDecomposition& td, const Graph& g) {
  ValidationReport report = validate(td, g);
  if (!report.ok()) throw InvalidDecomposition(std::move(report));
}

}  // namespace

TreeDecomposition contract_subset_bags(const TreeDecomposition& td) {
  return contract_where(td, [](int, int) { return true; });
}

// ---------------------------------------------------------------- sampling

Instance sample_instance(const GenConfig& cfg) {
  if (cfg.n < 0) throw GenerationFailure("n must be non-negative");
  if (cfg.width < 0) throw GenerationFailure("width cap must be non-negative");
  if (cfg.join_cap < 0) throw GenerationFailure("join width cap must be non-negative");
  for (double p : {cfg.join_density, cfg.edge_density, cfg.forget_bias}) {
    if (!(p >= 0.0 && p <= 1.0)) throw GenerationFailure("probabilities must lie in [0, 1]");
  }
  if (cfg.min_weight > cfg.max_weight) throw GenerationFailure("empty weight range");
  if (cfg.width + 1 > BagView::kMaxBagSize) throw GenerationFailure("width cap too large");

  Rng rng(cfg.seed);
  struct Node {
    Bag bag;
    int parent;
  };
  std::vector<Node> nodes{{{}, -1}};
  std::vector<int> joinable{0};  // nodes whose bag may host a join
  std::vector<Edge> edges;
  const std::size_t bag_limit = static_cast<std::size_t>(cfg.width) + 1;
  const std::size_t join_limit = static_cast<std::size_t>(cfg.join_cap) + 1;
  int cur = 0;
  int next_vertex = 0;
  const std::int64_t step_limit = 4 * (static_cast<std::int64_t>(cfg.n) + 1) * (cfg.width + 2) + 64;
  for (std::int64_t step = 0; next_vertex < cfg.n; ++step) {
    if (step > step_limit) throw GenerationFailure("walk did not reach the target size");
    if (nodes.size() > 1 && cfg.join_density > 0 && rng.chance(cfg.join_density)) {
      cur = joinable[rng.uniform(0, static_cast<std::int64_t>(joinable.size()) - 1)];
    }
    Bag bag = nodes[cur].bag;
    const bool can_introduce = bag.size() < bag_limit;
    const bool forget = !bag.empty() && (!can_introduce || rng.chance(cfg.forget_bias));
    if (forget) {
      bag.erase(bag.begin() + rng.uniform(0, static_cast<std::int64_t>(bag.size()) - 1));
    } else {
      const Vertex v = next_vertex++;
      for (Vertex u : bag) {
        if (rng.chance(cfg.edge_density)) edges.emplace_back(u, v);
      }
      bag.push_back(v);  // fresh vertices are the largest so far
    }
    nodes.push_back({std::move(bag), cur});
    cur = static_cast<int>(nodes.size()) - 1;
    if (nodes[cur].bag.size() <= join_limit) joinable.push_back(cur);
  }

  // Contract children into parents when one bag contains the other, unless
  // that would put a branching node on a bag above the join cap.
  const int count = static_cast<int>(nodes.size());
  std::vector<int> children(count, 0);
  for (int i = 1; i < count; ++i) ++children[nodes[i].parent];
  std::vector<int> merged_into(count, -1);
  auto target = [&](int x) {
    while (merged_into[x] >= 0) x = merged_into[x];
    return x;
  };
  for (int c = count - 1; c >= 1; --c) {
    const int p = target(nodes[c].parent);
    const Bag& cb = nodes[c].bag;
    const Bag& pb = nodes[p].bag;
    const bool c_in_p = subset_of(cb, pb);
    const bool p_in_c = subset_of(pb, cb);
    if (!c_in_p && !p_in_c) continue;
    const int after = children[p] - 1 + children[c];
    const std::size_t merged_size = std::max(cb.size(), pb.size());
    if (after >= 2 && merged_size > join_limit) continue;
    if (p_in_c) nodes[p].bag = cb;
    children[p] = after;
    merged_into[c] = p;
  }
  std::vector<int> index(count, -1);
  Instance inst;
  for (int i = 0; i < count; ++i) {
    if (merged_into[i] >= 0) continue;
    index[i] = static_cast<int>(inst.td.bags.size());
    inst.td.bags.push_back(nodes[i].bag);
  }
  for (int i = 1; i < count; ++i) {
    if (merged_into[i] >= 0) continue;
    inst.td.tree_edges.push_back(ordered(index[target(nodes[i].parent)], index[i]));
  }
  std::sort(inst.td.tree_edges.begin(), inst.td.tree_edges.end());

  inst.graph = build_graph(cfg.n, edges);
  inst.weights.resize(cfg.n);
  for (auto& w : inst.weights) w = rng.uniform(cfg.min_weight, cfg.max_weight);
  return inst;
}

// ---------------------------------------------------------------- perturbations

const char* to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::kReroot: return "reroot";
    case PerturbationKind::kSplitBag: return "split-bag";
    case PerturbationKind::kInsertRedundantBag: return "insert-redundant-bag";
    case PerturbationKind::kReorderIntroduce: return "reorder-introduce";
    case PerturbationKind::kSwapJoinChildren: return "swap-join-children";
    case PerturbationKind::kDegradeAndReconvert: return "degrade-to-non-nice-and-reconvert";
  }
  return "?";
}

Perturbed perturb(const TreeDecomposition& td, const Graph& g, PerturbationKind kind,
                  std::uint64_t seed) {
  require_valid(td, g);
  Rng rng(seed);
  Perturbed out{td, false};
  TreeDecomposition& r = out.td;
  const int count = static_cast<int>(td.bags.size());
  auto pick = [&](int n) { return static_cast<int>(rng.uniform(0, n - 1)); };

  switch (kind) {
    case PerturbationKind::kReroot: {
      if (count <= 1) {
        out.identity = true;
        break;
      }
      int root = pick(count - 1);
      if (root >= td.root_or_default()) ++root;
      r.root = root;
      break;
    }
    case PerturbationKind::kSplitBag: {
      if (count == 0) {
        out.identity = true;
        break;
      }
      const int t = pick(count);
      const int twin = count;
      r.bags.push_back(td.bags[t]);
      for (auto& e : r.tree_edges) {
        if ((e.first == t || e.second == t) && rng.chance(0.5)) {
          e = ordered(e.first == t ? twin : e.first, e.second == t ? twin : e.second);
        }
      }
      r.tree_edges.emplace_back(t, twin);
      break;
    }
    case PerturbationKind::kInsertRedundantBag:
    case PerturbationKind::kReorderIntroduce: {
      if (td.tree_edges.empty()) {
        out.identity = true;
        break;
      }
      const int e = pick(static_cast<int>(td.tree_edges.size()));
      auto [s, t] = td.tree_edges[e];
      if (rng.chance(0.5)) std::swap(s, t);
      Bag mid;
      if (kind == PerturbationKind::kInsertRedundantBag) {
        mid = td.bags[s];
      } else {
        const Bag bs = sorted(td.bags[s]);
        const Bag bt = sorted(td.bags[t]);
        for (Vertex v : bs) {
          const bool shared = std::binary_search(bt.begin(), bt.end(), v);
          if (shared || rng.chance(0.5)) mid.push_back(v);
        }
      }
      const int m = count;
      r.bags.push_back(std::move(mid));
      r.tree_edges[e] = ordered(s, m);
      r.tree_edges.push_back(ordered(m, t));
      break;
    }
    case PerturbationKind::kSwapJoinChildren: {
      if (count <= 1) {
        out.identity = true;
        break;
      }
      std::vector<int> perm(count);
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      for (int i = 0; i < count; ++i) r.bags[perm[i]] = td.bags[i];
      for (auto& [a, b] : r.tree_edges) std::tie(a, b) = ordered(perm[a], perm[b]);
      r.root = perm[td.root_or_default()];
      break;
    }
    case PerturbationKind::kDegradeAndReconvert: {
      TreeDecomposition expanded = to_tree_decomposition(to_nice(td, g));
      r = contract_where(expanded, [&](int, int) { return rng.chance(0.5); });
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- elimination

TreeDecomposition elimination_decomposition(const Graph& g, std::span<const Vertex> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) {
      throw std::invalid_argument("order is not a permutation");
    }
    pos[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::vector<bool>> fill(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) fill[u][v] = fill[v][u] = true;
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    Bag later;
    for (int u = 0; u < n; ++u) {
      if (fill[v][u] && pos[u] > i) later.push_back(u);
    }
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) fill[a][b] = true;
    Bag bag = later;
    bag.push_back(v);
    td.bags.push_back(sorted(bag));
    int first = -1;
    for (Vertex u : later) {
      if (first == -1 || pos[u] < first) first = pos[u];
    }
    parent[i] = first;
  }
  int previous_root = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (parent[i] >= 0) {
      td.tree_edges.push_back(ordered(i, parent[i]));
    } else {
      if (previous_root >= 0) td.tree_edges.push_back(ordered(i, previous_root));
      previous_root = i;
    }
  }
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  TreeDecomposition out = contract_subset_bags(td);
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

TreeDecomposition elimination_decomposition(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  return elimination_decomposition(g, order);
}

// ---------------------------------------------------------------- coverage

const char* to_string(Gadget g) {
  switch (g) {
    case Gadget::k4K1: return "4K1";
    case Gadget::kK2_2K1: return "K2+2K1";
    case Gadget::k2K2: return "2K2";
    case Gadget::kP3_K1: return "P3+K1";
    case Gadget::kK3_K1: return "K3+K1";
    case Gadget::kP4: return "P4";
    case Gadget::kClaw: return "claw";
    case Gadget::kC4: return "C4";
    case Gadget::kPaw: return "paw";
    case Gadget::kDiamond: return "diamond";
    case Gadget::kK4: return "K4";
  }
  return "?";
}

const char* to_string(Straddle s) {
  switch (s) {
    case Straddle::kOneBag: return "one-bag";
    case Straddle::kIntroduceSplit: return "introduce-split";
    case Straddle::kJoinSplit: return "join-split";
  }
  return "?";
}

Gadget classify_gadget(const Graph& g, const std::array<Vertex, 4>& q) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  switch (edges) {
    case 0: return Gadget::k4K1;
    case 1: return Gadget::kK2_2K1;
    case 2: return deg[0] == 0 ? Gadget::kP3_K1 : Gadget::k2K2;
    case 3:
      if (deg[0] == 0) return Gadget::kK3_K1;
      return deg[3] == 3 ? Gadget::kClaw : Gadget::kP4;
    case 4: return deg[3] == 3 ? Gadget::kPaw : Gadget::kC4;
    case 5: return Gadget::kDiamond;
    default: return Gadget::kK4;
  }
}

std::uint64_t CoverageReport::total(Gadget g) const {
  const auto& row = counts[static_cast<int>(g)];
  return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

std::vector<Gadget> CoverageReport::missing() const {
  std::vector<Gadget> out;
  for (int i = 0; i < kGadgetCount; ++i) {
    if (total(static_cast<Gadget>(i)) == 0) out.push_back(static_cast<Gadget>(i));
  }
  return out;
}

void CoverageReport::add(const Graph& g, const TreeDecomposition& td) {
  ++instances;
  std::unordered_set<std::uint64_t> seen;
  auto visit = [&](const Bag& pool, Straddle kind) {
    const std::size_t n = pool.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            std::array<Vertex, 4> q{pool[a], pool[b], pool[c], pool[d]};
            std::uint64_t key = 0;
            for (Vertex v : q) key = (key << 16) | static_cast<std::uint64_t>(v);
            if (!seen.insert(key).second) continue;
            ++counts[static_cast<int>(classify_gadget(g, q))][static_cast<int>(kind)];
          }
  };
  auto merged = [](const Bag& x, const Bag& y) {
    Bag u;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
    return u;
  };
  std::vector<Bag> bags;
  for (const auto& b : td.bags) bags.push_back(sorted(b));
  for (const auto& b : bags) visit(b, Straddle::kOneBag);
  for (const auto& [a, b] : td.tree_edges) visit(merged(bags[a], bags[b]), Straddle::kIntroduceSplit);
  const auto adj = tree_adjacency(td);
  const int root = td.root_or_default();
  for (int t = 0; t < static_cast<int>(adj.size()); ++t) {
    const std::size_t branches = adj[t].size() - (t == root ? 0 : 1);
    if (adj[t].size() < 2 || branches < 2) continue;
    for (std::size_t i = 0; i < adj[t].size(); ++i)
      for (std::size_t j = i + 1; j < adj[t].size(); ++j)
        visit(merged(bags[adj[t][i]], bags[adj[t][j]]), Straddle::kJoinSplit);
  }
}

std::string CoverageReport::to_string() const {
  std::ostringstream os;
  os << "instances: " << instances << "\n";
  os << "class      one-bag  introduce-split  join-split  total\n";
  for (int i = 0; i < kGadgetCount; ++i) {
    const auto g = static_cast<Gadget>(i);
    std::string name = twdp::to_string(g);
    name.resize(10, ' ');
    os << name << ' ' << counts[i][0] << "  " << counts[i][1] << "  " << counts[i][2] << "  "
       << total(g) << (total(g) == 0 ? "  MISSING" : "") << "\n";
  }
  return os.str();
}

CoverageReport gadget_coverage(std::span<const Instance> instances) {
  CoverageReport report;
  for (const auto& inst : instances) report.add(inst.graph, inst.td);
  return report;
}

// ---------------------------------------------------------------- catalog

WeightMap catalog_weights(int n) {
  WeightMap w(n);
  for (int v = 0; v < n; ++v) w[v] = 1 + (7919LL * v) % 100000;
  return w;
}

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return build_graph(n, e);
}

Graph star(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return build_graph(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  for (auto& [u, v] : e) std::tie(u, v) = ordered(u, v);
  return build_graph(10, e);
}

/// Cycle c0..c4 (vertices 0-4), pendant l_i (5-9) on each c_i, and a centre
/// (10) adjacent to c0 and c2.
Graph sun() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.push_back(ordered(i, (i + 1) % 5));
  for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
  e.emplace_back(0, 10);
  e.emplace_back(2, 10);
  return build_graph(11, e);
}

/// The first of up to 2000 seeded random orders reaching `target` width.
TreeDecomposition narrow_decomposition(const Graph& g, int target) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  TreeDecomposition best = elimination_decomposition(g, order);
  Rng rng(7);
  for (int attempt = 0; attempt < 2000 && width_of(best) > target; ++attempt) {
    rng.shuffle(order);
    TreeDecomposition td = elimination_decomposition(g, order);
    if (width_of(td) < width_of(best)) best = td;
  }
  return best;
}

Instance make(Graph g, WeightMap w, TreeDecomposition td) {
  return Instance{std::move(g), std::move(w), std::move(td)};
}

Instance with_catalog_weights(Graph g, int target_width) {
  TreeDecomposition td = narrow_decomposition(g, target_width);
  WeightMap w = catalog_weights(g.vertex_count());
  return make(std::move(g), std::move(w), std::move(td));
}

}  // namespace

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"empty", make(build_graph(0, std::span<const Edge>{}), {}, TreeDecomposition{{Bag{}}, {}, {}})});
  out.push_back({"single-vertex", make(build_graph(1, std::span<const Edge>{}), {7}, TreeDecomposition{{Bag{0}}, {}, {}})});
  out.push_back({"hand-p3", make(path(3), {1, 1, 1}, TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}, {}})});
  out.push_back({"hand-p4", make(path(4), {1, 1, 1, 1},
                                 TreeDecomposition{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}, {}})});
  out.push_back({"hand-k3", make(complete(3), {1, 1, 1}, TreeDecomposition{{{0, 1, 2}}, {}, {}})});
  for (int k = 4; k <= 6; ++k) {
    Bag all(k);
    std::iota(all.begin(), all.end(), 0);
    out.push_back({"k" + std::to_string(k),
                   make(complete(k), catalog_weights(k), TreeDecomposition{{all}, {}, {}})});
  }
  {
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    out.push_back({"k3-3", with_catalog_weights(build_graph(6, e), 3)});
  }
  out.push_back({"petersen", with_catalog_weights(petersen(), 4)});
  out.push_back({"path-10", with_catalog_weights(path(10), 1)});
  out.push_back({"cycle-9", with_catalog_weights(cycle(9), 2)});
  out.push_back({"star-12", with_catalog_weights(star(12), 1)});
  out.push_back({"sun", with_catalog_weights(sun(), 2)});
  out.push_back({"path-40", with_catalog_weights(path(40), 1)});
  out.push_back({"cycle-30", with_catalog_weights(cycle(30), 2)});
  out.push_back({"star-26", with_catalog_weights(star(26), 1)});
  return out;
}

}  // namespace twdp
