#include "twdp/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace twdp {

namespace {

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw OracleTooLarge("oracle predicates need n <= 64");
  std::vector<VertexMask> adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= VertexMask{1} << v;
    adj[v] |= VertexMask{1} << u;
  }
  return adj;
}

std::vector<int> members(VertexMask s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

/// Calls f on every 4-subset of `vs`; stops early when f returns true.
template <typename F>
bool any_quad(const std::vector<int>& vs, F&& f) {
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (f(std::array<int, 4>{vs[a], vs[b], vs[c], vs[d]})) return true;
  return false;
}

/// Edge count and sorted degree sequence of the graph induced on q.
std::pair<int, std::array<int, 4>> quad_shape(const std::vector<VertexMask>& adj,
                                              const std::array<int, 4>& q) {
  VertexMask m = 0;
  for (int v : q) m |= VertexMask{1} << v;
  std::array<int, 4> deg{};
  int twice_edges = 0;
  for (int i = 0; i < 4; ++i) {
    deg[i] = std::popcount(adj[q[i]] & m);
    twice_edges += deg[i];
  }
  std::sort(deg.begin(), deg.end());
  return {twice_edges / 2, deg};
}

bool has_induced_p4(const std::vector<VertexMask>& adj, VertexMask s) {
  return any_quad(members(s), [&](const std::array<int, 4>& q) {
    auto [e, deg] = quad_shape(adj, q);
    return e == 3 && deg == std::array<int, 4>{1, 1, 2, 2};
  });
}

bool has_induced_p3(const std::vector<VertexMask>& adj, VertexMask s) {
  for (int v : members(s)) {
    const auto nb = members(adj[v] & s);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!((adj[nb[i]] >> nb[j]) & 1u)) return true;
  }
  return false;
}

}  // namespace

bool is_dominating(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  for (int u = 0; u < g.vertex_count(); ++u) {
    if ((s >> u) & 1u) continue;
    if (!(adj[u] & s)) return false;
  }
  return true;
}

bool is_connected_ge_k(const Graph& g, VertexMask s, int k) {
  if (std::popcount(s) < k) return false;
  if (s == 0) return true;
  const auto adj = adjacency_masks(g);
  VertexMask seen = s & -s;
  VertexMask frontier = seen;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const VertexMask next = adj[v] & s & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen == s;
}

bool is_cograph(const Graph& g, VertexMask s) { return !has_induced_p4(adjacency_masks(g), s); }

bool is_bipartite(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  std::vector<int> colour(g.vertex_count(), -1);
  for (int root : members(s)) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : members(adj[v] & s)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_odd_cycle(const Graph& g, VertexMask s) {
  // A closed walk of odd length exists iff (v, even) reaches (v, odd) in the
  // parity cover; any odd closed walk contains an odd cycle.
  const auto adj = adjacency_masks(g);
  for (int v : members(s)) {
    std::array<VertexMask, 2> reached{VertexMask{1} << v, 0};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int parity = 0; parity < 2; ++parity) {
        VertexMask next = 0;
        for (int u : members(reached[parity])) next |= adj[u] & s;
        if (next & ~reached[1 - parity]) {
          reached[1 - parity] |= next;
          grew = true;
        }
      }
    }
    if ((reached[1] >> v) & 1u) return true;
  }
  return false;
}

bool triangle_free(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  for (const auto& [u, v] : g.edges()) {
    if (((s >> u) & 1u) && ((s >> v) & 1u) && (adj[u] & adj[v] & s)) return false;
  }
  return true;
}

bool c4_free(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  return !any_quad(members(s), [&](const std::array<int, 4>& q) {
    auto [e, deg] = quad_shape(adj, q);
    return e == 4 && deg == std::array<int, 4>{2, 2, 2, 2};
  });
}

bool is_cluster(const Graph& g, VertexMask s) { return !has_induced_p3(adjacency_masks(g), s); }

bool is_union_of_cliques(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  VertexMask left = s;
  while (left) {
    const int v = std::countr_zero(left);
    VertexMask comp = VertexMask{1} << v;
    VertexMask frontier = comp;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask next = adj[u] & s & ~comp;
      comp |= next;
      frontier |= next;
    }
    for (int u : members(comp)) {
      if ((adj[u] & comp) != (comp & ~(VertexMask{1} << u))) return false;
    }
    left &= ~comp;
  }
  return true;
}

bool is_maximal_cluster(const Graph& g, VertexMask s) {
  const auto adj = adjacency_masks(g);
  if (has_induced_p3(adj, s)) return false;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if ((s >> u) & 1u) continue;
    if (!has_induced_p3(adj, s | (VertexMask{1} << u))) return false;
  }
  return true;
}

const std::vector<std::string>& oracle_ids() {
  static const std::vector<std::string> ids = {
      "dominating-set",        "connected-ge-k", "cograph", "bipartite-cograph",
      "maximal-cluster-graph", "induced-c4-free"};
  return ids;
}

Predicate predicate_for(std::string_view id) {
  if (id == "dominating-set") return is_dominating;
  if (id == "connected-ge-k") return [](const Graph& g, VertexMask s) {
    return is_connected_ge_k(g, s, 4);
  };
  if (id == "cograph") return is_cograph;
  if (id == "bipartite-cograph") return [](const Graph& g, VertexMask s) {
    return is_cograph(g, s) && is_bipartite(g, s);
  };
  if (id == "maximal-cluster-graph") return is_maximal_cluster;
  if (id == "induced-c4-free") return c4_free;
  throw std::invalid_argument("unknown problem id: " + std::string(id));
}

OracleResult wmc_bruteforce(const Graph& g, const WeightMap& w, const Predicate& pred) {
  const int n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw OracleTooLarge("brute force refuses n = " + std::to_string(n) + " (limit " +
                         std::to_string(kOracleMaxVertices) + ")");
  }
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight map size mismatch");
  OracleResult r;
  const VertexMask total = VertexMask{1} << n;
  for (VertexMask s = 0; s < total; ++s) {
    if (!pred(g, s)) continue;
    unsigned __int128 sum = 0;
    for (int v : members(s)) sum += static_cast<unsigned __int128>(w[v]);
    r.exact += sum;
    r.feasible = true;
    ++r.accepted;
  }
  r.value = ModValue::from_int(static_cast<std::int64_t>(r.exact % ModValue::kModulus));
  return r;
}

std::string to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace twdp
