#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twdp/engine.hpp"

namespace twdp {

/// Sets S such that every vertex outside S has a neighbour in S.
/// Profile: per bag vertex IN / OUT_DOMINATED / OUT_NEEDS_DOMINATION.
SolverCallbacks dominating_set_solver();

/// Sets S with G[S] connected and |S| >= k. With `capped` false the size
/// counter is exact (up to 2^16 - 1); only useful for cross-checking.
SolverCallbacks connected_at_least_k_solver(int k = 4, bool capped = true);

/// Sets S with no induced P4 in G[S].
SolverCallbacks cograph_solver();

/// Cographs that are also bipartite, i.e. triangle-free cographs.
SolverCallbacks bipartite_cograph_solver();

/// Sets S with G[S] a cluster graph that is maximal under inclusion.
SolverCallbacks maximal_cluster_graph_solver();

/// Registered problem ids with a DP solver.
const std::vector<std::string>& solver_ids();

/// Throws std::invalid_argument for unknown ids.
SolverCallbacks make_solver(std::string_view id);

}  // namespace twdp
