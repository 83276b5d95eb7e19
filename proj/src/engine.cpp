#include "twdp/engine.hpp"

#include <algorithm>
#include <chrono>

namespace twdp {

BagView::BagView(const Graph& g, const WeightMap& w, Bag bag) : bag_(std::move(bag)) {
  if (bag_.size() > static_cast<std::size_t>(kMaxBagSize)) {
    throw EngineContractError("bag of " + std::to_string(bag_.size()) + " vertices exceeds " +
                              std::to_string(kMaxBagSize));
  }
  const int k = size();
  adjacency_.assign(bag_.size(), 0);
  weights_.resize(bag_.size());
  for (int i = 0; i < k; ++i) {
    weights_[i] = w.at(bag_[i]);
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(bag_[i], bag_[j])) {
        adjacency_[i] |= std::uint64_t{1} << j;
        adjacency_[j] |= std::uint64_t{1} << i;
      }
    }
  }
}

bool BagView::contains(Vertex v) const {
  return std::binary_search(bag_.begin(), bag_.end(), v);
}

int BagView::position(Vertex v) const {
  auto it = std::lower_bound(bag_.begin(), bag_.end(), v);
  if (it == bag_.end() || *it != v) {
    throw OutsideBagError("vertex " + std::to_string(v) + " is not in the current bag");
  }
  return static_cast<int>(it - bag_.begin());
}

std::vector<Edge> BagView::local_edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (adjacent_at(i, j)) out.emplace_back(bag_[i], bag_[j]);
    }
  }
  return out;
}

RunResult run(const NiceDecomposition& nd, const Graph& g, const WeightMap& w,
              const SolverCallbacks& cb, RunOptions options) {
  if (static_cast<int>(w.size()) != g.vertex_count()) {
    throw MalformedInput("weight map has " + std::to_string(w.size()) + " entries for " +
                         std::to_string(g.vertex_count()) + " vertices");
  }
  if (options.validate) {
    ValidationReport report = validate_nice(nd, g);
    if (!report.ok()) throw InvalidDecomposition(std::move(report));
  }

  RunResult result;
  RunStats& stats = result.stats;
  std::vector<DPTable> tables(nd.nodes.size());
  std::vector<char> done(nd.nodes.size(), 0);

  auto check_bag = [](const DPTable& t, const Bag& expected, std::size_t node) {
    if (t.bag() != expected) {
      throw EngineContractError("callback at node " + std::to_string(node) +
                                " returned a table keyed on a different bag");
    }
  };

  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<int, bool>> stack{{nd.root, false}};
  while (!stack.empty()) {
    auto [idx, expanded] = stack.back();
    const NiceNode& node = nd.nodes[idx];
    if (!expanded) {
      stack.back().second = true;
      if (node.right >= 0) stack.emplace_back(node.right, false);
      if (node.left >= 0) stack.emplace_back(node.left, false);
      continue;
    }
    stack.pop_back();

    const auto kind = static_cast<std::size_t>(node.kind);
    auto start = Clock::now();
    DPTable out;
    switch (node.kind) {
      case NiceKind::kLeaf:
        out = cb.leaf(BagView(g, w, node.bag));
        break;
      case NiceKind::kIntroduce:
        out = cb.introduce(BagView(g, w, node.bag), tables[node.left], node.vertex);
        tables[node.left] = DPTable();
        break;
      case NiceKind::kForget:
        out = cb.forget(BagView(g, w, nd.nodes[node.left].bag), tables[node.left], node.vertex);
        tables[node.left] = DPTable();
        break;
      case NiceKind::kJoin:
        out = cb.join(BagView(g, w, node.bag), tables[node.left], tables[node.right]);
        tables[node.left] = DPTable();
        tables[node.right] = DPTable();
        break;
    }
    stats.seconds[kind] += std::chrono::duration<double>(Clock::now() - start).count();
    ++stats.nodes[kind];
    check_bag(out, node.bag, static_cast<std::size_t>(idx));
    if (done[idx]) throw EngineContractError("node visited twice");
    done[idx] = 1;

    stats.max_rows = std::max(stats.max_rows, out.size());
    if (stats.max_rows_by_bag_size.size() <= node.bag.size()) {
      stats.max_rows_by_bag_size.resize(node.bag.size() + 1, 0);
    }
    auto& slot = stats.max_rows_by_bag_size[node.bag.size()];
    slot = std::max(slot, out.size());
    tables[idx] = std::move(out);
  }

  result.root = cb.extract(tables[nd.root]);
  return result;
}

}  // namespace twdp
