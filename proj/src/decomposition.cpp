#include "twdp/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twdp {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Bag sorted_copy(const Bag& b) {
  Bag s = b;
  std::sort(s.begin(), s.end());
  return s;
}

Bag set_difference(const Bag& a, const Bag& b) {
  Bag out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string edge_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadBagIndex: return "bad-bag-index";
    case ViolationKind::kBadVertex: return "bad-vertex";
    case ViolationKind::kDuplicateInBag: return "duplicate-in-bag";
    case ViolationKind::kNotATree: return "not-a-tree";
    case ViolationKind::kUncoveredVertex: return "uncovered-vertex";
    case ViolationKind::kUncoveredEdge: return "uncovered-edge";
    case ViolationKind::kRunningIntersection: return "running-intersection";
    case ViolationKind::kBadNiceNode: return "bad-nice-node";
    case ViolationKind::kRootNotEmpty: return "root-not-empty";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream os;
  for (const auto& v : violations) os << twdp::to_string(v.kind) << ": " << v.detail << "\n";
  return os.str();
}

ValidationReport validate(const TreeDecomposition& td, const Graph& g) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string d) {
    report.violations.push_back({k, std::move(d)});
  };
  const int nbags = static_cast<int>(td.bags.size());
  const int n = g.vertex_count();

  std::vector<Bag> bags;
  bags.reserve(td.bags.size());
  for (int i = 0; i < nbags; ++i) {
    Bag s;
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= n) {
        add(ViolationKind::kBadVertex, "bag " + std::to_string(i) + " holds vertex " +
                                           std::to_string(v));
      } else {
        s.push_back(v);
      }
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      add(ViolationKind::kDuplicateInBag, "bag " + std::to_string(i));
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    bags.push_back(std::move(s));
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nbags || b >= nbags) {
      add(ViolationKind::kBadBagIndex, "tree edge " + edge_str(a, b));
    } else {
      edges.emplace_back(a, b);
    }
  }

  if (td.root && (*td.root < 0 || *td.root >= nbags)) {
    add(ViolationKind::kBadBagIndex, "root " + std::to_string(*td.root));
  }

  bool is_tree = true;
  if (nbags > 0) {
    Dsu dsu(nbags);
    int merges = 0;
    for (auto [a, b] : edges) {
      if (dsu.unite(a, b)) {
        ++merges;
      } else {
        is_tree = false;
      }
    }
    if (merges != nbags - 1) is_tree = false;
  } else if (!edges.empty()) {
    is_tree = false;
  }
  if (!is_tree) {
    add(ViolationKind::kNotATree, std::to_string(nbags) + " bags, " +
                                      std::to_string(td.tree_edges.size()) + " edges");
  }

  std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
  for (int i = 0; i < nbags; ++i) {
    for (Vertex v : bags[i]) bags_of[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[v].empty()) add(ViolationKind::kUncoveredVertex, "vertex " + std::to_string(v));
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = bags_of[u];
    const auto& b = bags_of[v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) add(ViolationKind::kUncoveredEdge, "edge " + edge_str(u, v));
  }

  if (is_tree) {
    // In a tree, the bags holding v are connected iff they span |bags| - 1 edges.
    std::vector<int> inner_edges(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
      Bag common;
      std::set_intersection(bags[a].begin(), bags[a].end(), bags[b].begin(), bags[b].end(),
                            std::back_inserter(common));
      for (Vertex v : common) ++inner_edges[v];
    }
    for (Vertex v = 0; v < n; ++v) {
      int count = static_cast<int>(bags_of[v].size());
      if (count > 0 && inner_edges[v] != count - 1) {
        add(ViolationKind::kRunningIntersection, "vertex " + std::to_string(v));
      }
    }
  }
  return report;
}

InvalidDecomposition::InvalidDecomposition(ValidationReport report)
    : std::runtime_error("invalid tree decomposition:\n" + report.to_string()),
      report_(std::move(report)) {}

NiceDecomposition to_nice(const TreeDecomposition& td, const Graph& g) {
  ValidationReport report = validate(td, g);
  if (!report.ok()) throw InvalidDecomposition(std::move(report));

  NiceDecomposition nd;
  auto push = [&nd](NiceNode node) {
    nd.nodes.push_back(std::move(node));
    return static_cast<int>(nd.nodes.size()) - 1;
  };
  auto introduce = [&](int child, Vertex v) {
    NiceNode node{NiceKind::kIntroduce, nd.nodes[child].bag, v, child, -1};
    node.bag.insert(std::upper_bound(node.bag.begin(), node.bag.end(), v), v);
    return push(std::move(node));
  };
  auto forget = [&](int child, Vertex v) {
    NiceNode node{NiceKind::kForget, nd.nodes[child].bag, v, child, -1};
    node.bag.erase(std::lower_bound(node.bag.begin(), node.bag.end(), v));
    return push(std::move(node));
  };
  auto leaf_with = [&](const Bag& bag) {
    int cur;
    if (bag.empty()) {
      cur = push(NiceNode{NiceKind::kLeaf, {}, -1, -1, -1});
    } else {
      cur = push(NiceNode{NiceKind::kLeaf, {bag.front()}, bag.front(), -1, -1});
      for (std::size_t i = 1; i < bag.size(); ++i) cur = introduce(cur, bag[i]);
    }
    return cur;
  };
  auto move_to = [&](int from, const Bag& target) {
    Bag current = nd.nodes[from].bag;
    int cur = from;
    for (Vertex v : set_difference(current, target)) cur = forget(cur, v);
    for (Vertex v : set_difference(target, current)) cur = introduce(cur, v);
    return cur;
  };

  const int nbags = static_cast<int>(td.bags.size());
  if (nbags == 0) {
    nd.root = leaf_with({});
    return nd;
  }

  std::vector<Bag> bags;
  bags.reserve(td.bags.size());
  for (const auto& b : td.bags) bags.push_back(sorted_copy(b));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nbags));
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  const int root = td.root_or_default();
  std::vector<int> parent(static_cast<std::size_t>(nbags), -1);
  std::vector<int> order{root};
  order.reserve(static_cast<std::size_t>(nbags));
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int t = order[i];
    for (int c : adj[t]) {
      if (parent[c] == -1) {
        parent[c] = t;
        order.push_back(c);
      }
    }
  }

  std::vector<int> top(static_cast<std::size_t>(nbags), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    int acc = -1;
    for (int c : adj[t]) {
      if (c == parent[t]) continue;
      int chain = move_to(top[c], bags[t]);
      if (acc == -1) {
        acc = chain;
      } else {
        acc = push(NiceNode{NiceKind::kJoin, bags[t], -1, acc, chain});
      }
    }
    top[t] = acc == -1 ? leaf_with(bags[t]) : acc;
  }

  int cur = top[root];
  for (Vertex v : bags[root]) cur = forget(cur, v);
  nd.root = cur;
  return nd;
}

TreeDecomposition to_tree_decomposition(const NiceDecomposition& nd) {
  TreeDecomposition td;
  td.bags.reserve(nd.nodes.size());
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const auto& node = nd.nodes[i];
    td.bags.push_back(node.bag);
    const int self = static_cast<int>(i);
    for (int c : {node.left, node.right}) {
      if (c >= 0) td.tree_edges.emplace_back(std::min(c, self), std::max(c, self));
    }
  }
  if (nd.root >= 0) td.root = nd.root;
  return td;
}

ValidationReport validate_nice(const NiceDecomposition& nd, const Graph& g) {
  ValidationReport report;
  auto bad = [&](std::size_t i, const std::string& why) {
    report.violations.push_back(
        {ViolationKind::kBadNiceNode, "node " + std::to_string(i) + ": " + why});
  };
  const int count = static_cast<int>(nd.nodes.size());
  if (nd.root < 0 || nd.root >= count) {
    report.violations.push_back({ViolationKind::kNotATree, "root index out of range"});
    return report;
  }
  if (!nd.nodes[nd.root].bag.empty()) {
    report.violations.push_back({ViolationKind::kRootNotEmpty,
                                 "root bag has " +
                                     std::to_string(nd.nodes[nd.root].bag.size()) + " vertices"});
  }

  bool structure_ok = true;
  std::vector<int> parents(static_cast<std::size_t>(count), 0);
  auto child_ok = [&](std::size_t i, int c) {
    if (c < 0 || c >= count) {
      bad(i, "child index out of range");
      structure_ok = false;
      return false;
    }
    ++parents[c];
    return true;
  };
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const auto& node = nd.nodes[i];
    if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
        std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end()) {
      bad(i, "bag not strictly ascending");
      continue;
    }
    switch (node.kind) {
      case NiceKind::kLeaf:
        if (node.bag.size() > 1) bad(i, "leaf bag larger than one vertex");
        if (node.left != -1 || node.right != -1) bad(i, "leaf with children");
        break;
      case NiceKind::kIntroduce:
      case NiceKind::kForget: {
        if (node.right != -1) bad(i, "unary node with two children");
        if (!child_ok(i, node.left)) break;
        Bag expected = nd.nodes[node.left].bag;
        auto pos = std::lower_bound(expected.begin(), expected.end(), node.vertex);
        bool present = pos != expected.end() && *pos == node.vertex;
        if (node.kind == NiceKind::kIntroduce) {
          if (present) {
            bad(i, "introduced vertex already in child bag");
            break;
          }
          expected.insert(pos, node.vertex);
        } else {
          if (!present) {
            bad(i, "forgotten vertex not in child bag");
            break;
          }
          expected.erase(pos);
        }
        if (expected != node.bag) bad(i, "bag does not match child bag delta");
        break;
      }
      case NiceKind::kJoin:
        if (!child_ok(i, node.left) || !child_ok(i, node.right)) break;
        if (nd.nodes[node.left].bag != node.bag || nd.nodes[node.right].bag != node.bag) {
          bad(i, "join children bags differ from parent");
        }
        break;
    }
  }
  if (!structure_ok) return report;

  for (int i = 0; i < count; ++i) {
    int expected = i == nd.root ? 0 : 1;
    if (parents[i] != expected) {
      report.violations.push_back({ViolationKind::kNotATree,
                                   "node " + std::to_string(i) + " has " +
                                       std::to_string(parents[i]) + " parents"});
      return report;
    }
  }

  ValidationReport base = validate(to_tree_decomposition(nd), g);
  for (auto& v : base.violations) report.violations.push_back(std::move(v));
  return report;
}

int width_of(const TreeDecomposition& td) {
  std::size_t largest = 0;
  for (const auto& b : td.bags) largest = std::max(largest, b.size());
  return largest == 0 ? 0 : static_cast<int>(largest) - 1;
}

int width_of(const NiceDecomposition& nd) {
  std::size_t largest = 0;
  for (const auto& node : nd.nodes) largest = std::max(largest, node.bag.size());
  return largest == 0 ? 0 : static_cast<int>(largest) - 1;
}

}  // namespace twdp
