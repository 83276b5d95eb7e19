#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twdp/decomposition.hpp"
#include "twdp/graph.hpp"
#include "twdp/mod_value.hpp"

namespace twdp {

/// Count and total set-weight of a group of partial solutions, both mod P.
struct Aggregate {
  ModValue count;
  ModValue weight;

  Aggregate& operator+=(const Aggregate& o) {
    count += o.count;
    weight += o.weight;
    return *this;
  }
  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

/// Combines two groups of partial solutions from the two sides of a join.
/// Both sides already include the selected bag vertices (of total weight
/// `shared_weight`), which must be counted once in the product.
inline Aggregate join_aggregate(const Aggregate& a, const Aggregate& b, ModValue shared_weight) {
  ModValue count = a.count * b.count;
  return {count, a.weight * b.count + b.weight * a.count - count * shared_weight};
}

/// Adds one vertex of weight `w` to every solution in the group.
inline Aggregate with_vertex(const Aggregate& a, ModValue w) {
  return {a.count, a.weight + a.count * w};
}

using ProfileKey = std::uint64_t;

/// Profile -> aggregate map, tagged with the bag it is keyed on.
class DPTable {
 public:
  using Rows = std::unordered_map<ProfileKey, Aggregate>;

  DPTable() = default;
  explicit DPTable(Bag bag) : bag_(std::move(bag)) {}

  const Bag& bag() const { return bag_; }

  /// Merges by aggregate addition when the key is already present.
  void add(ProfileKey key, const Aggregate& agg) { rows_[key] += agg; }

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  Rows::const_iterator begin() const { return rows_.begin(); }
  Rows::const_iterator end() const { return rows_.end(); }
  const Aggregate* find(ProfileKey key) const {
    auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : &it->second;
  }
  void reserve(std::size_t n) { rows_.reserve(n); }

 private:
  Bag bag_;
  Rows rows_;
};

/// A callback asked about a vertex outside its bag.
class OutsideBagError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A callback broke the engine contract (e.g. returned a table keyed on the
/// wrong bag).
class EngineContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The graph as seen from a single bag: membership, adjacency and weights
/// of bag vertices only. Positions index the ascending bag order.
class BagView {
 public:
  static constexpr int kMaxBagSize = 64;

  BagView(const Graph& g, const WeightMap& w, Bag bag);

  const Bag& vertices() const { return bag_; }
  int size() const { return static_cast<int>(bag_.size()); }
  bool contains(Vertex v) const;

  /// Position of v in the bag; throws OutsideBagError if absent.
  int position(Vertex v) const;
  Vertex vertex_at(int pos) const { return bag_.at(pos); }

  bool adjacent(Vertex u, Vertex v) const { return adjacent_at(position(u), position(v)); }
  bool adjacent_at(int i, int j) const { return (adjacency_[i] >> j) & 1u; }
  /// Bit j set iff bag positions i and j are adjacent.
  std::uint64_t neighbor_mask(int i) const { return adjacency_[i]; }
  std::vector<Edge> local_edges() const;

  std::int64_t weight(Vertex v) const { return weights_[position(v)]; }
  ModValue weight_at(int pos) const { return ModValue::from_int(weights_[pos]); }

 private:
  Bag bag_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::int64_t> weights_;
};

/// The five procedures a solver supplies to the engine.
///
/// introduce gets the view of the new (larger) bag; forget gets the view of
/// the bag still holding the forgotten vertex and must return a table keyed
/// on that bag minus the vertex. extract returns the summed aggregate of
/// the accepted root profiles, or nullopt when none survives.
struct SolverCallbacks {
  std::string name;
  std::function<DPTable(const BagView&)> leaf;
  std::function<DPTable(const BagView&, const DPTable&, Vertex)> introduce;
  std::function<DPTable(const BagView&, const DPTable&, Vertex)> forget;
  std::function<DPTable(const BagView&, const DPTable&, const DPTable&)> join;
  std::function<std::optional<Aggregate>(const DPTable&)> extract;
};

struct RunStats {
  std::array<std::size_t, 4> nodes{};      // indexed by NiceKind
  std::array<double, 4> seconds{};         // callback time per NiceKind
  std::size_t max_rows = 0;
  std::vector<std::size_t> max_rows_by_bag_size;
};

struct RunResult {
  std::optional<Aggregate> root;
  RunStats stats;

  bool feasible() const { return root.has_value(); }
  /// Weighted model count; only meaningful when feasible().
  ModValue answer() const { return root ? root->weight : ModValue{}; }
};

struct RunOptions {
  bool validate = true;
};

/// Post-order traversal calling the matching callback at every node and
/// extract at the root.
RunResult run(const NiceDecomposition& nd, const Graph& g, const WeightMap& w,
              const SolverCallbacks& cb, RunOptions options = {});

}  // namespace twdp
