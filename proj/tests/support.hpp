#pragma once

#include <numeric>
#include <vector>

#include "twdp/decomposition.hpp"
#include "twdp/graph.hpp"

namespace twdp::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

/// Labelled graph on n vertices whose edges are the set bits of `code` over
/// the pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1u) e.emplace_back(u, v);
  return build_graph(n, e);
}

inline std::uint64_t graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Path decomposition of a path graph: bags {i, i+1}.
inline TreeDecomposition path_decomposition(int n) {
  TreeDecomposition td;
  if (n == 1) td.bags.push_back({0});
  for (int v = 0; v + 1 < n; ++v) td.bags.push_back({v, v + 1});
  for (int i = 0; i + 1 < static_cast<int>(td.bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
  return td;
}

inline TreeDecomposition single_bag(int n) {
  Bag all(n);
  std::iota(all.begin(), all.end(), 0);
  return TreeDecomposition{{all}, {}, {}};
}

}  // namespace twdp::testing
