#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "twdp/engine.hpp"

namespace twdp::detail {

inline bool test_bit(std::uint64_t mask, int pos) { return (mask >> pos) & 1u; }

/// Opens a zero slot at `pos`, shifting higher bits up.
inline std::uint64_t insert_bit(std::uint64_t mask, int pos) {
  const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
  return (mask & low) | ((mask & ~low) << 1);
}

/// Removes the slot at `pos`, shifting higher bits down.
inline std::uint64_t erase_bit(std::uint64_t mask, int pos) {
  const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
  return (mask & low) | ((mask >> 1) & ~low);
}

template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

inline ModValue selected_weight(const BagView& view, std::uint64_t sel) {
  ModValue total;
  for_each_bit(sel, [&](int p) { total += view.weight_at(p); });
  return total;
}

/// Single empty profile carrying one (empty) solution.
inline DPTable unit_table() {
  DPTable t{Bag{}};
  t.add(0, Aggregate{ModValue::from_int(1), ModValue{}});
  return t;
}

/// Leaf tables are the introduce of the leaf vertex into the unit table.
template <typename Introduce>
DPTable leaf_via_introduce(const BagView& view, Introduce&& introduce) {
  if (view.size() == 0) return unit_table();
  if (view.size() != 1) throw EngineContractError("leaf bag larger than one vertex");
  return introduce(view, unit_table(), view.vertex_at(0));
}

/// Aggregate of the empty root profile.
inline std::optional<Aggregate> extract_empty_profile(const DPTable& root) {
  if (!root.bag().empty()) throw EngineContractError("root bag is not empty");
  const Aggregate* agg = root.find(0);
  if (!agg) return std::nullopt;
  return *agg;
}

/// Groups rows of a table by a compatibility signature for join matching.
template <typename Signature>
std::unordered_map<std::uint64_t, std::vector<std::pair<ProfileKey, Aggregate>>> bucket_rows(
    const DPTable& table, Signature&& signature) {
  std::unordered_map<std::uint64_t, std::vector<std::pair<ProfileKey, Aggregate>>> buckets;
  for (const auto& [key, agg] : table) buckets[signature(key)].emplace_back(key, agg);
  return buckets;
}

inline void require_bag_at_most(const BagView& view, int limit, const char* solver) {
  if (view.size() > limit) {
    throw EngineContractError(std::string(solver) + " supports bags of at most " +
                              std::to_string(limit) + " vertices");
  }
}

}  // namespace twdp::detail
