#include <memory>

#include "common.hpp"
#include "twdp/solvers.hpp"

namespace twdp {

namespace {

using namespace detail;

// Three 16-bit masks over bag positions:
//   sel
//   slot A: selected -> has a forgotten selected neighbour (fn)
//           unselected -> already has a witness against adding it (safe)
//   slot B: selected -> its cluster owes a new member to some forgotten
//                       unselected vertex (ob)
//           unselected -> has a forgotten selected neighbour (fnu)
constexpr int kMaxBag = 16;

struct ClusterProfile {
  std::uint64_t sel = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  static ClusterProfile decode(ProfileKey key) {
    return {key & 0xffff, (key >> 16) & 0xffff, (key >> 32) & 0xffff};
  }
  ProfileKey encode() const { return sel | (a << 16) | (b << 32); }

  std::uint64_t fn() const { return a & sel; }
  std::uint64_t safe() const { return a & ~sel; }
  std::uint64_t ob() const { return b & sel; }
  std::uint64_t fnu() const { return b & ~sel; }

  void insert(int p) {
    sel = insert_bit(sel, p);
    a = insert_bit(a, p);
    b = insert_bit(b, p);
  }
  void erase(int p) {
    sel = erase_bit(sel, p);
    a = erase_bit(a, p);
    b = erase_bit(b, p);
  }
};

/// Does some selected vertex in `sn` have a selected bag neighbour outside
/// `nbrs` (other than `self`)? Equivalently, is there a P3 x - a - y with
/// x the vertex whose bag neighbourhood is `nbrs`.
bool partial_cluster(const BagView& view, std::uint64_t sel, std::uint64_t sn,
                     std::uint64_t nbrs, int self) {
  bool found = false;
  for_each_bit(sn, [&](int q) {
    const std::uint64_t other = view.neighbor_mask(q) & sel & ~nbrs & ~(std::uint64_t{1} << self);
    found = found || other != 0;
  });
  return found;
}

/// Are two members of `sn` non-adjacent?
bool spans_clusters(const BagView& view, std::uint64_t sn) {
  bool found = false;
  for_each_bit(sn, [&](int q) {
    const std::uint64_t others = sn & ~(std::uint64_t{1} << q);
    found = found || (others & ~view.neighbor_mask(q)) != 0;
  });
  return found;
}

DPTable introduce(const BagView& view, const DPTable& child, Vertex v) {
  require_bag_at_most(view, kMaxBag, "maximal-cluster-graph");
  const int p = view.position(v);
  const std::uint64_t bit = std::uint64_t{1} << p;
  const std::uint64_t nbrs = view.neighbor_mask(p);
  const ModValue wv = view.weight_at(p);
  DPTable out(view.vertices());
  for (const auto& [key, agg] : child) {
    ClusterProfile base = ClusterProfile::decode(key);
    base.insert(p);
    const std::uint64_t sn = nbrs & base.sel;
    const bool center = spans_clusters(view, sn);
    const bool endpoint = partial_cluster(view, base.sel, sn, nbrs, p);
    const bool via_forgotten = (sn & base.fn()) != 0;

    ClusterProfile out_v = base;
    if (center || endpoint || via_forgotten) out_v.a |= bit;
    out.add(out_v.encode(), agg);

    if (center || endpoint || via_forgotten) continue;
    ClusterProfile in_v = base;
    in_v.sel |= bit;
    in_v.b &= ~sn;
    std::uint64_t unsel = ~in_v.sel & ((std::uint64_t{1} << view.size()) - 1);
    for_each_bit(unsel, [&](int u) {
      const std::uint64_t ubit = std::uint64_t{1} << u;
      const std::uint64_t adj_u = view.neighbor_mask(u);
      bool now_safe = false;
      if (nbrs & ubit) {
        now_safe = (adj_u & base.sel & ~nbrs) != 0 || (sn & ~adj_u) != 0 || (base.fnu() & ubit);
      } else {
        now_safe = (adj_u & sn) != 0;
      }
      if (now_safe) in_v.a |= ubit;
    });
    out.add(in_v.encode(), with_vertex(agg, wv));
  }
  return out;
}

DPTable forget(const BagView& view, const DPTable& child, Vertex v) {
  const int p = view.position(v);
  const std::uint64_t bit = std::uint64_t{1} << p;
  const std::uint64_t nbrs = view.neighbor_mask(p);
  Bag bag = view.vertices();
  bag.erase(bag.begin() + p);
  DPTable out(std::move(bag));
  for (const auto& [key, agg] : child) {
    ClusterProfile prof = ClusterProfile::decode(key);
    if (prof.sel & bit) {
      if (prof.ob() & bit) continue;  // the cluster can no longer grow
      prof.a |= nbrs & prof.sel;
      prof.b |= nbrs & ~prof.sel;
    } else if (!(prof.safe() & bit)) {
      const std::uint64_t sn = nbrs & prof.sel;
      if (sn == 0) continue;
      prof.b |= sn;
    }
    prof.erase(p);
    out.add(prof.encode(), agg);
  }
  return out;
}

DPTable join(const BagView& view, const DPTable& left, const DPTable& right) {
  DPTable out(view.vertices());
  auto buckets = bucket_rows(right, [](ProfileKey k) { return k & 0xffff; });
  for (const auto& [lkey, lagg] : left) {
    const ClusterProfile l = ClusterProfile::decode(lkey);
    auto it = buckets.find(l.sel);
    if (it == buckets.end()) continue;
    const ModValue shared = selected_weight(view, l.sel);
    for (const auto& [rkey, ragg] : it->second) {
      const ClusterProfile r = ClusterProfile::decode(rkey);
      if (l.fn() & r.fn()) continue;
      ClusterProfile m;
      m.sel = l.sel;
      const std::uint64_t fn = l.fn() | r.fn();
      const std::uint64_t ob = (l.ob() & ~r.fn()) | (r.ob() & ~l.fn());
      const std::uint64_t safe = l.safe() | r.safe() | (l.fnu() & r.fnu());
      const std::uint64_t fnu = l.fnu() | r.fnu();
      m.a = fn | safe;
      m.b = ob | fnu;
      out.add(m.encode(), join_aggregate(lagg, ragg, shared));
    }
  }
  return out;
}

}  // namespace

SolverCallbacks maximal_cluster_graph_solver() {
  SolverCallbacks cb;
  cb.name = "maximal-cluster-graph";
  cb.leaf = [](const BagView& view) { return leaf_via_introduce(view, introduce); };
  cb.introduce = introduce;
  cb.forget = forget;
  cb.join = join;
  cb.extract = extract_empty_profile;
  return cb;
}

}  // namespace twdp
