#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twdp/mod_value.hpp"

namespace twdp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raw (unreduced) vertex weights, indexed by vertex id.
using WeightMap = std::vector<std::int64_t>;

inline constexpr std::int64_t kMinWeight = 1;
inline constexpr std::int64_t kMaxWeight = 100'000;

/// Thrown for structurally malformed input (bad endpoints, self-loops, ...).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// The edge list keeps the first occurrence of every edge in the order and
/// orientation it was supplied, so a parsed instance serializes back to the
/// same bytes. Equality only looks at the vertex count and adjacency.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edge_list);

  std::vector<std::vector<Vertex>> adjacency_;  // sorted
  std::vector<Edge> edges_;
};

/// Builds a simple graph, dropping duplicate edges. Throws MalformedInput on
/// out-of-range endpoints or self-loops.
Graph build_graph(int n, std::span<const Edge> edge_list);

inline Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// Sum of w(v) over v in the set, reduced modulo the prime.
ModValue set_weight(std::span<const Vertex> vertices, const WeightMap& w);

}  // namespace twdp
