#include "twdp/graph.hpp"

#include <algorithm>
#include <set>

namespace twdp {

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

Graph build_graph(int n, std::span<const Edge> edge_list) {
  if (n < 0) throw MalformedInput("negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  std::set<Edge> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw MalformedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw MalformedInput("self-loop on vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
    g.edges_.emplace_back(u, v);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

ModValue set_weight(std::span<const Vertex> vertices, const WeightMap& w) {
  ModValue total;
  for (Vertex v : vertices) total += ModValue::from_int(w.at(v));
  return total;
}

}  // namespace twdp
