#include "common.hpp"
#include "twdp/solvers.hpp"

namespace twdp {

namespace {

using namespace detail;

// Key layout: IN mask in the low 32 bits, OUT_DOMINATED mask in the high 32.
// Positions in neither mask are OUT_NEEDS_DOMINATION.
constexpr int kMaxBag = 32;

struct DomProfile {
  std::uint64_t in = 0;
  std::uint64_t dominated = 0;

  static DomProfile decode(ProfileKey key) { return {key & 0xffffffffu, key >> 32}; }
  ProfileKey encode() const { return in | (dominated << 32); }
};

DPTable introduce(const BagView& view, const DPTable& child, Vertex v) {
  require_bag_at_most(view, kMaxBag, "dominating-set");
  const int p = view.position(v);
  const std::uint64_t nbrs = view.neighbor_mask(p);
  const ModValue wv = view.weight_at(p);
  DPTable out(view.vertices());
  out.reserve(child.size() * 2);
  for (const auto& [key, agg] : child) {
    DomProfile base = DomProfile::decode(key);
    base.in = insert_bit(base.in, p);
    base.dominated = insert_bit(base.dominated, p);

    DomProfile out_v = base;
    if (nbrs & base.in) out_v.dominated |= std::uint64_t{1} << p;
    out.add(out_v.encode(), agg);

    DomProfile in_v = base;
    in_v.in |= std::uint64_t{1} << p;
    in_v.dominated |= nbrs & ~base.in;
    out.add(in_v.encode(), with_vertex(agg, wv));
  }
  return out;
}

DPTable forget(const BagView& view, const DPTable& child, Vertex v) {
  const int p = view.position(v);
  Bag bag = view.vertices();
  bag.erase(bag.begin() + p);
  DPTable out(std::move(bag));
  for (const auto& [key, agg] : child) {
    DomProfile prof = DomProfile::decode(key);
    if (!test_bit(prof.in | prof.dominated, p)) continue;  // never dominated
    prof.in = erase_bit(prof.in, p);
    prof.dominated = erase_bit(prof.dominated, p);
    out.add(prof.encode(), agg);
  }
  return out;
}

DPTable join(const BagView& view, const DPTable& left, const DPTable& right) {
  DPTable out(view.vertices());
  auto buckets = bucket_rows(right, [](ProfileKey k) { return DomProfile::decode(k).in; });
  for (const auto& [lkey, lagg] : left) {
    const DomProfile l = DomProfile::decode(lkey);
    auto it = buckets.find(l.in);
    if (it == buckets.end()) continue;
    const ModValue shared = selected_weight(view, l.in);
    for (const auto& [rkey, ragg] : it->second) {
      const DomProfile r = DomProfile::decode(rkey);
      DomProfile merged{l.in, l.dominated | r.dominated};
      out.add(merged.encode(), join_aggregate(lagg, ragg, shared));
    }
  }
  return out;
}

}  // namespace

SolverCallbacks dominating_set_solver() {
  SolverCallbacks cb;
  cb.name = "dominating-set";
  cb.leaf = [](const BagView& view) { return leaf_via_introduce(view, introduce); };
  cb.introduce = introduce;
  cb.forget = forget;
  cb.join = join;
  cb.extract = extract_empty_profile;
  return cb;
}

}  // namespace twdp
