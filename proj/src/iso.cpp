#include "latkit/iso.hpp"

#include <algorithm>
#include <map>

#include "latkit/config.hpp"

namespace latkit {

namespace {

struct Refined {
  std::vector<int> color;                  // per element, 0-based rank
  std::vector<std::vector<int64_t>> keys;  // per color, label-independent key
};

std::vector<Bitset> downs_of(const std::vector<Bitset>& up) {
  const int n = int(up.size());
  std::vector<Bitset> down(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = up[i].first(); j >= 0; j = up[i].next(j)) down[j].set(i);
  return down;
}

// Covers derived from the order; callers pass arbitrary posets here.
void cover_lists(const std::vector<Bitset>& up, const std::vector<Bitset>& down,
                 std::vector<std::vector<int>>& uppers, std::vector<std::vector<int>>& lowers) {
  const int n = int(up.size());
  uppers.assign(n, {});
  lowers.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = up[x].first(); y >= 0; y = up[x].next(y)) {
      if (y == x) continue;
      bool cover = true;
      for (int z = up[x].first(); z >= 0 && cover; z = up[x].next(z))
        if (z != x && z != y && up[z].test(y)) cover = false;
      if (cover) {
        uppers[x].push_back(y);
        lowers[y].push_back(x);
      }
    }
}

// Iterated partition refinement on (height, depth, degrees) plus cover-color
// multisets. Colors are ranks of sorted label-independent keys, so isomorphic
// posets refine to matching colorings.
Refined refine(const std::vector<Bitset>& up) {
  const int n = int(up.size());
  std::vector<Bitset> down = downs_of(up);
  std::vector<std::vector<int>> uppers, lowers;
  cover_lists(up, down, uppers, lowers);

  std::vector<int> height(n, 0), depth(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return down[a].count() < down[b].count(); });
  for (int x : order)
    for (int y : lowers[x]) height[x] = std::max(height[x], height[y] + 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return up[a].count() < up[b].count(); });
  for (int x : order)
    for (int y : uppers[x]) depth[x] = std::max(depth[x], depth[y] + 1);

  std::vector<std::vector<int64_t>> key(n);
  for (int i = 0; i < n; ++i)
    key[i] = {height[i], depth[i], int64_t(uppers[i].size()), int64_t(lowers[i].size()),
              up[i].count(), down[i].count()};

  Refined r;
  r.color.assign(n, 0);
  int rounds = 0;
  while (true) {
    std::map<std::vector<int64_t>, int> rank;
    for (int i = 0; i < n; ++i) rank[key[i]] = 0;
    int c = 0;
    for (auto& [k, v] : rank) v = c++;
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) color[i] = rank[key[i]];
    bool stable = (rounds > 0 && color == r.color);
    r.color = color;
    if (stable || ++rounds > n) {
      r.keys.assign(c, {});
      for (auto& [k, v] : rank) r.keys[v] = k;
      return r;
    }
    for (int i = 0; i < n; ++i) {
      std::vector<int64_t> nk = {color[i]};
      std::vector<int64_t> upc, loc;
      for (int y : uppers[i]) upc.push_back(color[y]);
      for (int y : lowers[i]) loc.push_back(color[y]);
      std::sort(upc.begin(), upc.end());
      std::sort(loc.begin(), loc.end());
      nk.push_back(-1);
      nk.insert(nk.end(), upc.begin(), upc.end());
      nk.push_back(-2);
      nk.insert(nk.end(), loc.begin(), loc.end());
      key[i] = std::move(nk);
    }
  }
}

// Minimal matrix encoding over all color-respecting permutations. The string
// compared is, per position k: leq(p_i,p_k) for i<=k then leq(p_k,p_j) for j<k.
struct CanonSearch {
  const std::vector<Bitset>& up;
  std::vector<int> pos_color;  // required color at each position
  std::vector<std::vector<int>> members;
  std::vector<int> perm;
  std::vector<uint8_t> used;
  std::vector<uint8_t> cur, best;
  bool have_best = false;

  explicit CanonSearch(const std::vector<Bitset>& up, const Refined& r) : up(up) {
    const int n = int(up.size());
    members.resize(r.keys.size());
    for (int i = 0; i < n; ++i) members[r.color[i]].push_back(i);
    for (size_t c = 0; c < members.size(); ++c)
      for (size_t k = 0; k < members[c].size(); ++k) pos_color.push_back(int(c));
    perm.assign(n, -1);
    used.assign(n, 0);
  }

  // Prefixes are re-compared against the current best in full; strings stay
  // tiny at enumeration sizes, and this keeps pruning valid when best moves.
  int prefix_cmp() const {
    for (size_t t = 0; t < cur.size(); ++t) {
      if (cur[t] != best[t]) return int(cur[t]) - int(best[t]);
    }
    return 0;
  }

  void dfs(int k) {
    const int n = int(up.size());
    if (k == n) {
      if (!have_best || prefix_cmp() < 0) {
        best = cur;
        have_best = true;
      }
      return;
    }
    size_t base = cur.size();
    for (int e : members[pos_color[k]]) {
      if (used[e]) continue;
      cur.resize(base);
      for (int i = 0; i < k; ++i) cur.push_back(up[perm[i]].test(e) ? 1 : 0);
      for (int j = 0; j < k; ++j) cur.push_back(up[e].test(perm[j]) ? 1 : 0);
      if (have_best && prefix_cmp() > 0) continue;
      used[e] = 1;
      perm[k] = e;
      dfs(k + 1);
      used[e] = 0;
    }
    cur.resize(base);
  }
};

}  // namespace

std::vector<uint64_t> canonical_key(const std::vector<Bitset>& up) {
  const int n = int(up.size());
  Refined r = refine(up);
  CanonSearch s(up, r);
  s.dfs(0);
  // pack: n, color class sizes, then the minimal matrix string
  std::vector<uint64_t> out;
  out.push_back(uint64_t(n));
  uint64_t sizes = 0;
  for (auto& m : s.members) sizes = sizes * 131 + m.size();
  out.push_back(sizes);
  uint64_t w = 0;
  int bits = 0;
  for (uint8_t b : s.best) {
    w = (w << 1) | b;
    if (++bits == 64) {
      out.push_back(w);
      w = 0;
      bits = 0;
    }
  }
  if (bits) out.push_back(w << (64 - bits));
  return out;
}

std::vector<uint64_t> canonical_key(const FiniteLattice& l) {
  std::vector<Bitset> up;
  up.reserve(l.size());
  for (int i = 0; i < l.size(); ++i) up.push_back(l.up_set(i));
  return canonical_key(up);
}

std::vector<uint64_t> canonical_key(const Poset& p) { return canonical_key(p.up); }

std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                              int cap) {
  if (cap < 0) cap = iso_cap();
  if (a.size() > cap || b.size() > cap)
    fail(Err::SizeGuard, "lattice exceeds isomorphism search bound of " + std::to_string(cap) +
                             " (set LATKIT_CAP to raise)");
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  const int n = a.size();

  std::vector<Bitset> ua, ub;
  for (int i = 0; i < n; ++i) ua.push_back(a.up_set(i));
  for (int i = 0; i < n; ++i) ub.push_back(b.up_set(i));
  Refined ra = refine(ua), rb = refine(ub);
  if (ra.keys != rb.keys) return std::nullopt;
  std::vector<std::vector<int>> ma(ra.keys.size()), mb(rb.keys.size());
  for (int i = 0; i < n; ++i) ma[ra.color[i]].push_back(i);
  for (int i = 0; i < n; ++i) mb[rb.color[i]].push_back(i);
  for (size_t c = 0; c < ma.size(); ++c)
    if (ma[c].size() != mb[c].size()) return std::nullopt;

  // assign elements of a in most-constrained-class order
  std::vector<int> elems;
  {
    std::vector<size_t> cls(ma.size());
    for (size_t c = 0; c < ma.size(); ++c) cls[c] = c;
    std::sort(cls.begin(), cls.end(),
              [&](size_t x, size_t y) { return ma[x].size() != ma[y].size() ? ma[x].size() < ma[y].size() : x < y; });
    for (size_t c : cls)
      for (int e : ma[c]) elems.push_back(e);
  }

  std::vector<int> map(n, -1);
  std::vector<uint8_t> used(n, 0);
  auto consistent = [&](int x, int y, size_t upto) {
    for (size_t i = 0; i < upto; ++i) {
      int p = elems[i], q = map[p];
      if (a.leq(x, p) != b.leq(y, q) || a.leq(p, x) != b.leq(q, y)) return false;
    }
    return true;
  };
  // iterative backtracking
  std::vector<int> choice(n, -1);
  size_t k = 0;
  while (true) {
    if (k == elems.size()) {
      std::vector<int> out(n);
      for (int i = 0; i < n; ++i) out[i] = map[i];
      return out;
    }
    int x = elems[k];
    auto& cand = mb[ra.color[x]];
    int ci = choice[k] + 1;
    bool advanced = false;
    for (; ci < int(cand.size()); ++ci) {
      int y = cand[ci];
      if (used[y]) continue;
      if (!consistent(x, y, k)) continue;
      choice[k] = ci;
      map[x] = y;
      used[y] = 1;
      advanced = true;
      ++k;
      break;
    }
    if (!advanced) {
      choice[k] = -1;
      if (k == 0) return std::nullopt;
      --k;
      int px = elems[k], py = map[px];
      used[py] = 0;
      map[px] = -1;
    }
  }
}

}  // namespace latkit
