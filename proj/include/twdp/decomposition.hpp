#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twdp/graph.hpp"

namespace twdp {

using Bag = std::vector<Vertex>;

/// A tree of bags. Bag contents and edge orientation are kept exactly as
/// supplied; algorithms work on sorted copies.
struct TreeDecomposition {
  std::vector<Bag> bags;
  std::vector<std::pair<int, int>> tree_edges;
  std::optional<int> root;

  int root_or_default() const { return root.value_or(0); }
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class ViolationKind {
  kBadBagIndex,
  kBadVertex,
  kDuplicateInBag,
  kNotATree,
  kUncoveredVertex,
  kUncoveredEdge,
  kRunningIntersection,
  kBadNiceNode,
  kRootNotEmpty,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

/// Checks tree shape, vertex/edge coverage and running intersection. Every
/// violation is reported; nothing throws.
ValidationReport validate(const TreeDecomposition& td, const Graph& g);

enum class NiceKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  Bag bag;                // sorted ascending
  Vertex vertex = -1;     // introduced / forgotten vertex; leaf vertex if any
  int left = -1;          // only child for Introduce/Forget
  int right = -1;         // second child for Join
};

/// Nice tree decomposition. Nodes are stored children-first; root has an
/// empty bag.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
};

/// Thrown by to_nice when the input decomposition is invalid.
class InvalidDecomposition : public std::runtime_error {
 public:
  explicit InvalidDecomposition(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Converts a valid decomposition into nice form. Deltas along a tree edge
/// forget first, then introduce, each in ascending vertex order. Children
/// are visited in ascending bag index and folded into binary joins.
NiceDecomposition to_nice(const TreeDecomposition& td, const Graph& g);

/// Every nice node becomes a bag; tree edges connect parent and child.
TreeDecomposition to_tree_decomposition(const NiceDecomposition& nd);

/// Node-kind invariants plus the ordinary decomposition properties.
ValidationReport validate_nice(const NiceDecomposition& nd, const Graph& g);

/// Largest bag size minus one, never below zero.
int width_of(const TreeDecomposition& td);
int width_of(const NiceDecomposition& nd);

}  // namespace twdp
