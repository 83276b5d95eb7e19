#include <array>
#include <memory>

#include "common.hpp"
#include "twdp/solvers.hpp"

namespace twdp {

namespace {

using namespace detail;

// Profile over the selected bag vertices, with F = forgotten selected
// vertices (none of which is adjacent to anything not yet introduced):
//
//   fn(p)        some x in F is adjacent to p
//   p2(p)        some induced path y - x - p with x, y in F
//   priv(p, q)   some x in F is adjacent to p but not to q      (ordered)
//   common(p, q) some x in F is adjacent to both p and q        (symmetric)
//
// A P4 that is not yet complete meets F in at most two vertices hanging off
// at most two bag vertices, and these four relations describe exactly the
// ways that can happen. All bits are functions of S restricted to the
// processed part, so the profile is canonical.
//
// Key layout for b bag positions: sel, fn, p2 (b bits each), then priv for
// ordered pairs p != q, then common for p < q: 3b + 3b(b-1)/2 bits <= 63.
constexpr int kMaxBag = 6;

struct CographProfile {
  int size = 0;
  std::uint32_t sel = 0;
  std::uint32_t fn = 0;
  std::uint32_t p2 = 0;
  std::array<std::uint32_t, kMaxBag + 1> priv{};
  std::array<std::uint32_t, kMaxBag + 1> common{};

  static CographProfile decode(ProfileKey key, int size) {
    CographProfile c;
    c.size = size;
    const std::uint32_t m = (1u << size) - 1;
    int at = 0;
    auto take = [&](int bits) {
      std::uint32_t v = static_cast<std::uint32_t>((key >> at) & ((1u << bits) - 1));
      at += bits;
      return v;
    };
    c.sel = take(size) & m;
    c.fn = take(size);
    c.p2 = take(size);
    for (int p = 0; p < size; ++p) {
      for (int q = 0; q < size; ++q) {
        if (p != q && take(1)) c.priv[p] |= 1u << q;
      }
    }
    for (int p = 0; p < size; ++p) {
      for (int q = p + 1; q < size; ++q) {
        if (take(1)) {
          c.common[p] |= 1u << q;
          c.common[q] |= 1u << p;
        }
      }
    }
    return c;
  }

  ProfileKey encode() const {
    ProfileKey key = 0;
    int at = 0;
    auto put = [&](std::uint64_t v, int bits) {
      key |= v << at;
      at += bits;
    };
    put(sel, size);
    put(fn, size);
    put(p2, size);
    for (int p = 0; p < size; ++p) {
      for (int q = 0; q < size; ++q) {
        if (p != q) put((priv[p] >> q) & 1u, 1);
      }
    }
    for (int p = 0; p < size; ++p) {
      for (int q = p + 1; q < size; ++q) put((common[p] >> q) & 1u, 1);
    }
    return key;
  }

  void insert(int pos) {
    sel = static_cast<std::uint32_t>(insert_bit(sel, pos));
    fn = static_cast<std::uint32_t>(insert_bit(fn, pos));
    p2 = static_cast<std::uint32_t>(insert_bit(p2, pos));
    for (int i = size; i > pos; --i) {
      priv[i] = priv[i - 1];
      common[i] = common[i - 1];
    }
    priv[pos] = 0;
    common[pos] = 0;
    ++size;
    for (int i = 0; i < size; ++i) {
      priv[i] = static_cast<std::uint32_t>(insert_bit(priv[i], pos));
      common[i] = static_cast<std::uint32_t>(insert_bit(common[i], pos));
    }
  }

  void erase(int pos) {
    sel = static_cast<std::uint32_t>(erase_bit(sel, pos));
    fn = static_cast<std::uint32_t>(erase_bit(fn, pos));
    p2 = static_cast<std::uint32_t>(erase_bit(p2, pos));
    for (int i = pos; i + 1 < size; ++i) {
      priv[i] = priv[i + 1];
      common[i] = common[i + 1];
    }
    --size;
    priv[size] = 0;
    common[size] = 0;
    for (int i = 0; i < size; ++i) {
      priv[i] = static_cast<std::uint32_t>(erase_bit(priv[i], pos));
      common[i] = static_cast<std::uint32_t>(erase_bit(common[i], pos));
    }
  }
};

/// Four vertices with adjacency bits form an induced P4 iff there are three
/// edges and the degree sequence is 1,1,2,2.
bool is_p4(const std::array<std::array<bool, 4>, 4>& adj) {
  int edges = 0;
  int deg1 = 0;
  int deg2 = 0;
  for (int i = 0; i < 4; ++i) {
    int d = 0;
    for (int j = 0; j < 4; ++j) d += (i != j && adj[i][j]) ? 1 : 0;
    edges += d;
    deg1 += d == 1;
    deg2 += d == 2;
  }
  return edges == 6 && deg1 == 2 && deg2 == 2;
}

using Adj4 = std::array<std::array<bool, 4>, 4>;

void link(Adj4& adj, int i, int j) { adj[i][j] = adj[j][i] = true; }

/// Neighbourhood of a forgotten vertex among bag positions {a, b}.
enum class Hang { kA, kB, kBoth };

void hang(Adj4& adj, int x, Hang h, int a, int b) {
  if (h != Hang::kB) link(adj, x, a);
  if (h != Hang::kA) link(adj, x, b);
}

/// Ways a forgotten vertex can hang off the selected pair (a, b).
std::array<bool, 3> hangs(const CographProfile& c, int a, int b) {
  return {static_cast<bool>((c.priv[a] >> b) & 1u), static_cast<bool>((c.priv[b] >> a) & 1u),
          static_cast<bool>((c.common[a] >> b) & 1u)};
}

class CographSolver {
 public:
  explicit CographSolver(bool triangle_free) : triangle_free_(triangle_free) {}

  DPTable introduce(const BagView& view, const DPTable& child, Vertex v) const {
    require_bag_at_most(view, kMaxBag, "cograph");
    const int p = view.position(v);
    const std::uint32_t nbrs = static_cast<std::uint32_t>(view.neighbor_mask(p));
    const ModValue wv = view.weight_at(p);
    DPTable out(view.vertices());
    for (const auto& [key, agg] : child) {
      CographProfile c = CographProfile::decode(key, view.size() - 1);
      c.insert(p);
      out.add(c.encode(), agg);
      if (creates_forbidden(view, c, p, nbrs)) continue;
      for_each_bit(c.sel, [&](int q) {
        if ((c.fn >> q) & 1u) c.priv[q] |= 1u << p;  // z is adjacent to no forgotten vertex
      });
      c.sel |= 1u << p;
      out.add(c.encode(), with_vertex(agg, wv));
    }
    return out;
  }

  DPTable forget(const BagView& view, const DPTable& child, Vertex v) const {
    const int p = view.position(v);
    const std::uint32_t nbrs = static_cast<std::uint32_t>(view.neighbor_mask(p));
    Bag bag = view.vertices();
    bag.erase(bag.begin() + p);
    DPTable out(std::move(bag));
    for (const auto& [key, agg] : child) {
      CographProfile c = CographProfile::decode(key, view.size());
      if ((c.sel >> p) & 1u) {
        const std::uint32_t rest = c.sel & ~(1u << p);
        const std::uint32_t adj = nbrs & rest;
        for_each_bit(rest, [&](int q) {
          const bool zq = (adj >> q) & 1u;
          // New induced 2-paths ending at q through the forgotten vertex z:
          // y - z - q with y ~ z, y !~ q, or z - x - q with x ~ q, z !~ q.
          if ((zq && ((c.priv[p] >> q) & 1u)) || (!zq && ((c.common[p] >> q) & 1u))) {
            c.p2 |= 1u << q;
          }
          if (zq) {
            c.fn |= 1u << q;
            c.common[q] |= adj & ~(1u << q);
            c.priv[q] |= rest & ~adj & ~(1u << q);
          }
        });
      }
      c.erase(p);
      out.add(c.encode(), agg);
    }
    return out;
  }

  DPTable join(const BagView& view, const DPTable& left, const DPTable& right) const {
    const int size = view.size();
    DPTable out(view.vertices());
    const std::uint64_t sel_mask = (std::uint64_t{1} << size) - 1;
    auto buckets = bucket_rows(right, [&](ProfileKey k) { return k & sel_mask; });
    for (const auto& [lkey, lagg] : left) {
      auto it = buckets.find(lkey & sel_mask);
      if (it == buckets.end()) continue;
      const CographProfile l = CographProfile::decode(lkey, size);
      const ModValue shared = selected_weight(view, l.sel);
      for (const auto& [rkey, ragg] : it->second) {
        const CographProfile r = CographProfile::decode(rkey, size);
        if (crosses_into_p4(view, l, r)) continue;
        CographProfile m = l;
        m.fn |= r.fn;
        m.p2 |= r.p2;
        for (int i = 0; i < size; ++i) {
          m.priv[i] |= r.priv[i];
          m.common[i] |= r.common[i];
        }
        out.add(m.encode(), join_aggregate(lagg, ragg, shared));
      }
    }
    return out;
  }

 private:
  /// Would selecting position p (currently unselected in c) complete an
  /// induced P4 (or a triangle, for the bipartite variant)?
  bool creates_forbidden(const BagView& view, const CographProfile& c, int p,
                         std::uint32_t nbrs) const {
    std::array<int, kMaxBag> s{};
    int count = 0;
    for_each_bit(c.sel, [&](int q) { s[count++] = q; });

    if (triangle_free_) {
      const std::uint32_t sn = nbrs & c.sel;
      bool triangle = false;
      for_each_bit(sn, [&](int q) { triangle = triangle || (view.neighbor_mask(q) & sn); });
      if (triangle) return true;
    }

    // Two forgotten vertices: z - q - x - y.
    if (c.p2 & nbrs) return true;

    // All four in the bag.
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        for (int k = j + 1; k < count; ++k) {
          const int ids[4] = {p, s[i], s[j], s[k]};
          Adj4 adj{};
          for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              if (view.adjacent_at(ids[a], ids[b])) link(adj, a, b);
            }
          }
          if (is_p4(adj)) return true;
        }
      }
    }

    // One forgotten vertex x hanging off a selected pair (a, b).
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        const int a = s[i];
        const int b = s[j];
        const auto h = hangs(c, a, b);
        for (int kind = 0; kind < 3; ++kind) {
          if (!h[kind]) continue;
          // 0 = x, 1 = z, 2 = a, 3 = b
          Adj4 adj{};
          hang(adj, 0, static_cast<Hang>(kind), 2, 3);
          if ((nbrs >> a) & 1u) link(adj, 1, 2);
          if ((nbrs >> b) & 1u) link(adj, 1, 3);
          if (view.adjacent_at(a, b)) link(adj, 2, 3);
          if (is_p4(adj)) return true;
        }
      }
    }
    return false;
  }

  /// P4s using forgotten vertices from both sides of a join.
  static bool crosses_into_p4(const BagView& view, const CographProfile& l,
                              const CographProfile& r) {
    // Two from one side forming a 2-path into q, one from the other side on q.
    if ((l.p2 & r.fn) || (r.p2 & l.fn)) return true;
    // One from each side, hanging off a selected pair.
    bool found = false;
    for_each_bit(l.sel, [&](int a) {
      for_each_bit(l.sel & ~((2u << a) - 1), [&](int b) {
        if (found) return;
        const auto hl = hangs(l, a, b);
        const auto hr = hangs(r, a, b);
        for (int i = 0; i < 3 && !found; ++i) {
          if (!hl[i]) continue;
          for (int j = 0; j < 3 && !found; ++j) {
            if (!hr[j]) continue;
            // 0 = x_left, 1 = x_right, 2 = a, 3 = b
            Adj4 adj{};
            hang(adj, 0, static_cast<Hang>(i), 2, 3);
            hang(adj, 1, static_cast<Hang>(j), 2, 3);
            if (view.adjacent_at(a, b)) link(adj, 2, 3);
            found = is_p4(adj);
          }
        }
      });
    });
    return found;
  }

  bool triangle_free_;
};

SolverCallbacks make_callbacks(std::string name, bool triangle_free) {
  auto solver = std::make_shared<const CographSolver>(triangle_free);
  SolverCallbacks cb;
  cb.name = std::move(name);
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
  cb.extract = extract_empty_profile;
  return cb;
}

}  // namespace

SolverCallbacks cograph_solver() { return make_callbacks("cograph", false); }

SolverCallbacks bipartite_cograph_solver() { return make_callbacks("bipartite-cograph", true); }

}  // namespace twdp
