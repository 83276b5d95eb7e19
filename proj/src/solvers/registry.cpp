#include <stdexcept>
#include <string>

#include "twdp/solvers.hpp"

namespace twdp {

const std::vector<std::string>& solver_ids() {
  static const std::vector<std::string> ids = {"dominating-set", "connected-ge-k", "cograph",
                                               "bipartite-cograph", "maximal-cluster-graph"};
  return ids;
}

SolverCallbacks make_solver(std::string_view id) {
  if (id == "dominating-set") return dominating_set_solver();
  if (id == "connected-ge-k") return connected_at_least_k_solver();
  if (id == "cograph") return cograph_solver();
  if (id == "bipartite-cograph") return bipartite_cograph_solver();
  if (id == "maximal-cluster-graph") return maximal_cluster_graph_solver();
  throw std::invalid_argument("unknown problem id: " + std::string(id));
}

}  // namespace twdp
