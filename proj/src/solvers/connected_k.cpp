#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "common.hpp"
#include "twdp/solvers.hpp"

namespace twdp {

namespace {

using namespace detail;

// Key layout: 4-bit class label per bag position (0 = not selected), labels
// in restricted-growth order; 16-bit counter of forgotten selected vertices
// (saturating at the cap) at bit 44; detached bit 60.
constexpr int kMaxBag = 11;
constexpr int kCounterShift = 44;
constexpr int kDetachedShift = 60;
constexpr int kUncappedLimit = 0xffff;

struct ConnProfile {
  int size = 0;
  std::array<std::uint8_t, kMaxBag + 1> label{};
  int counter = 0;
  bool detached = false;

  static ConnProfile decode(ProfileKey key, int size) {
    ConnProfile p;
    p.size = size;
    for (int i = 0; i < size; ++i) p.label[i] = (key >> (4 * i)) & 0xf;
    p.counter = static_cast<int>((key >> kCounterShift) & 0xffff);
    p.detached = (key >> kDetachedShift) & 1;
    return p;
  }

  /// Relabels classes in order of their first position, then packs.
  ProfileKey encode() const {
    std::array<std::uint8_t, 16> remap{};
    std::uint8_t next = 0;
    ProfileKey key = 0;
    for (int i = 0; i < size; ++i) {
      std::uint8_t l = label[i];
      if (l == 0) continue;
      if (remap[l] == 0) remap[l] = ++next;
      key |= ProfileKey{remap[l]} << (4 * i);
    }
    key |= ProfileKey(counter) << kCounterShift;
    key |= ProfileKey(detached) << kDetachedShift;
    return key;
  }

  void insert(int pos, std::uint8_t l) {
    for (int i = size; i > pos; --i) label[i] = label[i - 1];
    label[pos] = l;
    ++size;
  }

  void erase(int pos) {
    for (int i = pos; i + 1 < size; ++i) label[i] = label[i + 1];
    label[size - 1] = 0;
    --size;
  }
};

std::uint64_t selected_of_key(ProfileKey key) {
  std::uint64_t m = 0;
  for (int i = 0; i < kMaxBag; ++i) {
    if ((key >> (4 * i)) & 0xf) m |= std::uint64_t{1} << i;
  }
  return m;
}

class ConnectedSolver {
 public:
  ConnectedSolver(int k, bool capped) : k_(k), cap_(capped ? k : kUncappedLimit) {
    if (k < 1) throw std::invalid_argument("connected-ge-k needs k >= 1");
  }

  DPTable introduce(const BagView& view, const DPTable& child, Vertex v) const {
    require_bag_at_most(view, kMaxBag, "connected-ge-k");
    const int p = view.position(v);
    const std::uint64_t nbrs = view.neighbor_mask(p);
    const ModValue wv = view.weight_at(p);
    const int child_size = view.size() - 1;
    DPTable out(view.vertices());
    for (const auto& [key, agg] : child) {
      ConnProfile base = ConnProfile::decode(key, child_size);
      base.insert(p, 0);
      out.add(base.encode(), agg);

      // A detached component can never meet a newly selected vertex.
      if (base.detached) continue;
      ConnProfile in = base;
      const std::uint8_t fresh = 15;
      in.label[p] = fresh;
      std::array<bool, 16> absorb{};
      for_each_bit(nbrs, [&](int q) { absorb[in.label[q]] = in.label[q] != 0; });
      for (int i = 0; i < in.size; ++i) {
        if (absorb[in.label[i]]) in.label[i] = fresh;
      }
      out.add(in.encode(), with_vertex(agg, wv));
    }
    return out;
  }

  DPTable forget(const BagView& view, const DPTable& child, Vertex v) const {
    const int p = view.position(v);
    Bag bag = view.vertices();
    bag.erase(bag.begin() + p);
    DPTable out(std::move(bag));
    for (const auto& [key, agg] : child) {
      ConnProfile prof = ConnProfile::decode(key, view.size());
      const std::uint8_t l = prof.label[p];
      if (l != 0) {
        prof.counter = std::min(cap_, prof.counter + 1);
        bool shared = false;
        bool others = false;
        for (int i = 0; i < prof.size; ++i) {
          if (i == p || prof.label[i] == 0) continue;
          others = true;
          shared = shared || prof.label[i] == l;
        }
        if (!shared) {
          // The class closes: it becomes the one detached component, which
          // is final, so it must already be large enough and alone.
          if (others || prof.detached || prof.counter < k_) continue;
          prof.detached = true;
        }
      }
      prof.erase(p);
      out.add(prof.encode(), agg);
    }
    return out;
  }

  DPTable join(const BagView& view, const DPTable& left, const DPTable& right) const {
    const int size = view.size();
    DPTable out(view.vertices());
    auto buckets = bucket_rows(right, selected_of_key);
    for (const auto& [lkey, lagg] : left) {
      const std::uint64_t sel = selected_of_key(lkey);
      auto it = buckets.find(sel);
      if (it == buckets.end()) continue;
      const ConnProfile l = ConnProfile::decode(lkey, size);
      const ModValue shared = selected_weight(view, sel);
      for (const auto& [rkey, ragg] : it->second) {
        const ConnProfile r = ConnProfile::decode(rkey, size);
        if (l.detached && r.detached) continue;
        ConnProfile merged = l;
        merged.detached = l.detached || r.detached;
        merged.counter = std::min(cap_, l.counter + r.counter);
        // Union positions that share a class on either side.
        std::array<int, kMaxBag> parent{};
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        for (int i = 0; i < size; ++i) {
          for (int j = i + 1; j < size; ++j) {
            if (l.label[i] == 0 || l.label[j] == 0) continue;
            if (l.label[i] == l.label[j] || r.label[i] == r.label[j]) parent[find(i)] = find(j);
          }
        }
        for (int i = 0; i < size; ++i) {
          if (l.label[i]) merged.label[i] = static_cast<std::uint8_t>(find(i) + 1);
        }
        out.add(merged.encode(), join_aggregate(lagg, ragg, shared));
      }
    }
    return out;
  }

  std::optional<Aggregate> extract(const DPTable& root) const {
    if (!root.bag().empty()) throw EngineContractError("root bag is not empty");
    std::optional<Aggregate> total;
    for (const auto& [key, agg] : root) {
      ConnProfile prof = ConnProfile::decode(key, 0);
      if (!prof.detached || prof.counter < k_) continue;
      if (!total) total = Aggregate{};
      *total += agg;
    }
    return total;
  }

 private:
  int k_;
  int cap_;
};

}  // namespace

SolverCallbacks connected_at_least_k_solver(int k, bool capped) {
  auto solver = std::make_shared<const ConnectedSolver>(k, capped);
  SolverCallbacks cb;
  cb.name = "connected-ge-k";
  auto intro = [solver](const BagView& view, const DPTable& child, Vertex v) {
    return solver->introduce(view, child, v);
  };
  cb.leaf = [intro](const BagView& view) { return leaf_via_introduce(view, intro); };
  cb.introduce = intro;
  cb.forget = [solver](const BagView& view, const DPTable& child, Vertex v) {
    return solver->forget(view, child, v);
  };
  cb.join = [solver](const BagView& view, const DPTable& l, const DPTable& r) {
    return solver->join(view, l, r);
  };
  cb.extract = [solver](const DPTable& root) { return solver->extract(root); };
  return cb;
}

}  // namespace twdp
