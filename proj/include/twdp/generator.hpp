#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twdp/instance_io.hpp"

namespace twdp {

/// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  int n = 12;
  int width = 2;           // bags hold at most width + 1 vertices
  int join_cap = 2;        // join bags hold at most join_cap + 1 vertices
  double join_density = 0.15;
  double edge_density = 0.6;
  double forget_bias = 0.3;  // chance of forgetting while the bag is not full
  std::int64_t min_weight = kMinWeight;
  std::int64_t max_weight = kMaxWeight;
  std::uint64_t seed = 1;
};

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "warmup", "standard" or "stress".
GenConfig preset(std::string_view name);
const std::vector<std::string>& preset_names();
/// A preset name, or a JSON file whose keys override the standard preset.
GenConfig load_config(const std::string& name_or_path);
std::string describe(const GenConfig& cfg);

/// Random walk that grows a decomposition bag by bag: a fresh vertex is
/// introduced (with random edges to the current bag) or a bag vertex is
/// forgotten; occasionally the walk jumps back to an earlier small bag,
/// creating a join there. Bags whose set is contained in a neighbour's are
/// contracted afterwards.
Instance sample_instance(const GenConfig& cfg);

enum class PerturbationKind {
  kReroot,
  kSplitBag,
  kInsertRedundantBag,
  kReorderIntroduce,
  kSwapJoinChildren,
  kDegradeAndReconvert,
};
inline constexpr std::array<PerturbationKind, 6> kAllPerturbations = {
    PerturbationKind::kReroot,           PerturbationKind::kSplitBag,
    PerturbationKind::kInsertRedundantBag, PerturbationKind::kReorderIntroduce,
    PerturbationKind::kSwapJoinChildren, PerturbationKind::kDegradeAndReconvert};
const char* to_string(PerturbationKind kind);

struct Perturbed {
  TreeDecomposition td;
  bool identity = false;  // the perturbation did not apply to this input
};

/// Another valid decomposition of g with the same width. Throws
/// InvalidDecomposition if td is not valid for g.
Perturbed perturb(const TreeDecomposition& td, const Graph& g, PerturbationKind kind,
                  std::uint64_t seed);

/// Decomposition from eliminating vertices in the given order. Bags whose set
/// is contained in a neighbour's are contracted.
TreeDecomposition elimination_decomposition(const Graph& g, std::span<const Vertex> order);
TreeDecomposition elimination_decomposition(const Graph& g);  // order 0..n-1

/// Repeatedly merges a bag into a neighbouring superset bag.
TreeDecomposition contract_subset_bags(const TreeDecomposition& td);

/// Isomorphism classes of 4-vertex graphs.
enum class Gadget {
  k4K1, kK2_2K1, k2K2, kP3_K1, kK3_K1, kP4, kClaw, kC4, kPaw, kDiamond, kK4,
};
inline constexpr int kGadgetCount = 11;
const char* to_string(Gadget g);
Gadget classify_gadget(const Graph& g, const std::array<Vertex, 4>& q);

/// How a vertex 4-set sits relative to the decomposition: inside one bag,
/// inside the union of two adjacent bags, or inside the union of two bags
/// adjacent to a common branching bag.
enum class Straddle { kOneBag, kIntroduceSplit, kJoinSplit };
inline constexpr int kStraddleCount = 3;
const char* to_string(Straddle s);

struct CoverageReport {
  std::size_t instances = 0;
  std::array<std::array<std::uint64_t, kStraddleCount>, kGadgetCount> counts{};

  std::uint64_t total(Gadget g) const;
  std::vector<Gadget> missing() const;
  void add(const Graph& g, const TreeDecomposition& td);
  std::string to_string() const;
};

CoverageReport gadget_coverage(std::span<const Instance> instances);

struct CatalogEntry {
  std::string name;
  Instance instance;
};

/// Small named graphs with hand-picked decompositions.
std::vector<CatalogEntry> build_catalog();

/// The catalog's vertex weights: 1 + (7919 * v) mod 100000.
WeightMap catalog_weights(int n);

}  // namespace twdp
