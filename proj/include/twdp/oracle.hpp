#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twdp/graph.hpp"

namespace twdp {

/// Vertex subset as a bitmask over 0..n-1 (n <= 64).
using VertexMask = std::uint64_t;

bool is_dominating(const Graph& g, VertexMask s);
bool is_connected_ge_k(const Graph& g, VertexMask s, int k = 4);
/// No induced P4 in G[S].
bool is_cograph(const Graph& g, VertexMask s);
/// G[S] is 2-colourable.
bool is_bipartite(const Graph& g, VertexMask s);
/// G[S] has no odd cycle, by explicit search for odd closed walks of
/// minimal length (an independent check of is_bipartite).
bool has_odd_cycle(const Graph& g, VertexMask s);
bool triangle_free(const Graph& g, VertexMask s);
/// No induced C4 in G[S].
bool c4_free(const Graph& g, VertexMask s);
/// No induced P3 in G[S].
bool is_cluster(const Graph& g, VertexMask s);
/// Every component of G[S] is a clique.
bool is_union_of_cliques(const Graph& g, VertexMask s);
/// Cluster, and no single vertex can be added keeping it a cluster.
bool is_maximal_cluster(const Graph& g, VertexMask s);

using Predicate = std::function<bool(const Graph&, VertexMask)>;

/// Predicates by problem id: the five solver ids plus "induced-c4-free".
Predicate predicate_for(std::string_view id);
const std::vector<std::string>& oracle_ids();

inline constexpr int kOracleMaxVertices = 22;

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  unsigned __int128 exact = 0;  // plain integer sum of w(S) over accepted S
  ModValue value;
  bool feasible = false;
  std::uint64_t accepted = 0;  // number of accepted subsets
};

/// Enumerates all 2^n subsets. Throws OracleTooLarge above kOracleMaxVertices.
OracleResult wmc_bruteforce(const Graph& g, const WeightMap& w, const Predicate& pred);

/// Decimal rendering of the exact sum.
std::string to_string(unsigned __int128 v);

}  // namespace twdp
