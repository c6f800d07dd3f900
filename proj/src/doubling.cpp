#include "latkit/doubling.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "latkit/constructors.hpp"
#include "latkit/iso.hpp"
#include "latkit/predicates.hpp"

namespace latkit {

std::optional<std::array<int, 3>> convexity_witness(const FiniteLattice& l, const Bitset& s) {
  int n = l.size();
  for (int r = 0; r < n; ++r) {
    if (s.test(r)) continue;
    Bitset below = l.down_set(r) & s;
    Bitset above = l.up_set(r) & s;
    if (below.any() && above.any()) return std::array<int, 3>{below.first(), r, above.first()};
  }
  return std::nullopt;
}

DoubleResult day_double(const FiniteLattice& l, const DoublingSpec& spec) {
  int n = l.size();
  if (spec.region.capacity() != n)
    fail(Err::CarrierMismatch, "region does not index the base lattice");
  if (auto w = convexity_witness(l, spec.region))
    fail(Err::NotConvex, "doubling region is not convex", {(*w)[0], (*w)[1], (*w)[2]});
  if (spec.interval) {
    if (spec.region.none()) fail(Err::NotAnInterval, "interval region cannot be empty");
    int lo = l.meet_of(spec.region), hi = l.join_of(spec.region);
    if (!(spec.region == (l.up_set(lo) & l.down_set(hi))))
      fail(Err::NotAnInterval, "region is not the full interval of its extrema", {lo, hi});
  }

  std::vector<int> cm = spec.region.to_vector();
  int c = int(cm.size());
  int m = n + c;
  std::vector<int> upper_rank(n, -1);
  for (int i = 0; i < c; ++i) upper_rank[cm[i]] = i;

  // New index a covers base element base(a) with copy bit bit(a); elements
  // outside the region keep their single image at the base index.
  auto base_of = [&](int a) { return a < n ? a : cm[a - n]; };
  auto bit_of = [&](int a) { return a >= n ? 1 : 0; };

  // Order: both copies of the region compare by base order plus copy bit;
  // every other pair inherits the base order outright.
  std::vector<Bitset> up(m, Bitset(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int u = base_of(a), v = base_of(b);
      if (!l.leq(u, v)) continue;
      if (spec.region.test(u) && spec.region.test(v) && bit_of(a) > bit_of(b)) continue;
      up[a].set(b);
    }

  std::vector<std::string> names(m);
  for (int e = 0; e < n; ++e)
    names[e] = spec.region.test(e) ? "(" + l.name(e) + ",0)" : l.name(e);
  for (int i = 0; i < c; ++i) names[n + i] = "(" + l.name(cm[i]) + ",1)";

  DoubleResult res{FiniteLattice::from_up_sets(std::move(up), std::move(names)), {}, {}, {}};
  res.lower_image.resize(n);
  res.upper_image.resize(n);
  res.projection.resize(m);
  for (int e = 0; e < n; ++e) {
    res.lower_image[e] = e;
    res.upper_image[e] = spec.region.test(e) ? n + upper_rank[e] : e;
  }
  for (int a = 0; a < m; ++a) res.projection[a] = base_of(a);

  // Erasing the copy bit must be a surjective homomorphism onto the base.
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int u = res.projection[a], v = res.projection[b];
      if (res.projection[res.lattice.join(a, b)] != l.join(u, v) ||
          res.projection[res.lattice.meet(a, b)] != l.meet(u, v))
        fail(Err::Internal, "copy-erasing projection is not a homomorphism", {a, b});
    }
  return res;
}

std::optional<int> whitman_doubling_guard_witness(const FiniteLattice& l, const Bitset& region) {
  if (auto w = convexity_witness(l, region))
    fail(Err::NotConvex, "guard region is not convex", {(*w)[0], (*w)[1], (*w)[2]});
  Bitset di = join_irreducibles(l) & meet_irreducibles(l);
  for (int u = region.first(); u >= 0; u = region.next(u)) {
    Bitset strictly_above = l.up_set(u) & region;
    strictly_above.reset(u);
    Bitset strictly_below = l.down_set(u) & region;
    strictly_below.reset(u);
    if (strictly_above.any() && strictly_below.any() && !di.test(u)) return u;
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<int>> dependency_arrows(const FiniteLattice& l) {
  int n = l.size();
  std::vector<std::vector<int>> arrows(n);
  Bitset ji = join_irreducibles(l);
  std::vector<int> irr = ji.to_vector();
  for (int p : irr)
    for (int q : irr) {
      if (p == q || l.leq(p, q)) continue;
      int qstar = l.lower_covers(q)[0];
      for (int x = 0; x < n; ++x)
        if (l.leq(p, l.join(q, x)) && !l.leq(p, l.join(qstar, x))) {
          arrows[p].push_back(q);
          break;
        }
    }
  return arrows;
}

// Either fills `cycle` (vertices of one directed cycle, in order) or `order`
// (every vertex with out-arrows-first postorder, so targets precede sources).
void analyze_digraph(const std::vector<std::vector<int>>& arrows, const std::vector<int>& verts,
                     std::vector<int>& cycle, std::vector<int>& order) {
  int n = int(arrows.size());
  std::vector<int> color(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  std::function<bool(int)> dfs = [&](int v) -> bool {
    color[v] = 1;
    for (int w : arrows[v]) {
      if (color[w] == 1) {
        cycle.assign(1, w);
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return true;
      }
      if (color[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    color[v] = 2;
    order.push_back(v);
    return false;
  };
  for (int v : verts)
    if (color[v] == 0 && dfs(v)) return;
}

}  // namespace

std::vector<std::vector<int>> join_dependency(const FiniteLattice& l) {
  return dependency_arrows(l);
}

std::vector<std::vector<int>> meet_dependency(const FiniteLattice& l) {
  // dual() keeps element indices, so the dual's join dependency is exactly
  // the meet dependency of l.
  return dependency_arrows(dual(l));
}

BoundednessReport boundedness_report(const FiniteLattice& l) {
  BoundednessReport rep;
  std::vector<int> jverts = join_irreducibles(l).to_vector();
  std::vector<int> mverts = meet_irreducibles(l).to_vector();
  analyze_digraph(join_dependency(l), jverts, rep.join_cycle, rep.join_order);
  analyze_digraph(meet_dependency(l), mverts, rep.meet_cycle, rep.meet_order);
  rep.bounded = rep.join_cycle.empty() && rep.meet_cycle.empty();
  if (!rep.bounded) {
    rep.join_order.clear();
    rep.meet_order.clear();
  }
  return rep;
}

std::optional<UndoubleSequence> undouble_search(const FiniteLattice& l, long long budget) {
  int n = l.size();
  if (n > kUndoubleDefaultCap)
    fail(Err::CapExceeded, "undouble search capped at " + std::to_string(kUndoubleDefaultCap) +
                               " elements");
  auto target_key = canonical_key(l);

  UndoubleSequence seq;
  seq.stages.push_back(chain_lattice(1));
  if (n == 1) return seq;

  std::set<std::vector<uint64_t>> visited;
  visited.insert(canonical_key(seq.stages[0]));
  long long spent = 0;

  std::function<bool()> dfs = [&]() -> bool {
    FiniteLattice stage = seq.stages.back();  // copy: the vector grows below
    int sn = stage.size();
    struct Cand {
      int size, lo, hi;
    };
    std::vector<Cand> cands;
    for (int lo = 0; lo < sn; ++lo)
      for (int hi = 0; hi < sn; ++hi)
        if (stage.leq(lo, hi)) {
          int c = (stage.up_set(lo) & stage.down_set(hi)).count();
          if (sn + c <= n) cands.push_back({c, lo, hi});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.size != b.size) return a.size > b.size;
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.hi < b.hi;
    });
    for (const Cand& cand : cands) {
      if (++spent > budget) fail(Err::BudgetExceeded, "undouble search budget exhausted");
      DoublingSpec spec{stage.up_set(cand.lo) & stage.down_set(cand.hi), true};
      DoubleResult dbl = day_double(stage, spec);
      auto key = canonical_key(dbl.lattice);
      if (!visited.insert(key).second) continue;
      if (dbl.lattice.size() == n) {
        if (key == target_key) {
          seq.stages.push_back(dbl.lattice);
          seq.steps.push_back(spec);
          return true;
        }
        continue;
      }
      seq.stages.push_back(dbl.lattice);
      seq.steps.push_back(spec);
      if (dfs()) return true;
      seq.stages.pop_back();
      seq.steps.pop_back();
    }
    return false;
  };
  if (dfs()) return seq;
  return std::nullopt;
}

}  // namespace latkit
