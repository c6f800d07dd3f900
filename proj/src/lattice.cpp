#include "latkit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "latkit/config.hpp"
#include "latkit/predicates.hpp"

namespace latkit {

int iso_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("LATKIT_CAP")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 64;
  }();
  return cap;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::NotAPartialOrder: return "NotAPartialOrder";
    case Err::NotALattice: return "NotALattice";
    case Err::CapExceeded: return "CapExceeded";
    case Err::SizeGuard: return "SizeGuard";
    case Err::NotDistributive: return "NotDistributive";
    case Err::NotConvex: return "NotConvex";
    case Err::NotAnInterval: return "NotAnInterval";
    case Err::CarrierMismatch: return "CarrierMismatch";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::NotDistributiveTarget: return "NotDistributiveTarget";
    case Err::UnknownFixture: return "UnknownFixture";
    case Err::UnknownElement: return "UnknownElement";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::ProbeOutsideVariety: return "ProbeOutsideVariety";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::UnclassifiableGadget: return "UnclassifiableGadget";
    case Err::ElementOutOfWindow: return "ElementOutOfWindow";
    case Err::ParseError: return "ParseError";
    case Err::BadDocument: return "BadDocument";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                        std::vector<std::string> names) {
  Poset p;
  p.n = n;
  p.up.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i) p.up[i].set(i);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(Err::BadDocument, "pair index out of range");
    p.up[a].set(b);
  }
  // transitive closure, then antisymmetry check
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = p.up[i].first(); j >= 0; j = p.up[i].next(j))
        if (j != i && !p.up[j].is_subset_of(p.up[i])) {
          p.up[i] |= p.up[j];
          changed = true;
        }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.up[i].test(j) && p.up[j].test(i))
        fail(Err::NotAPartialOrder, "antisymmetry fails", {i, j});
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (int(names.size()) != n) fail(Err::BadDocument, "name count mismatch");
  p.names = std::move(names);
  return p;
}

namespace {

std::vector<std::string> default_names(int n, std::vector<std::string> names) {
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (int(names.size()) != n) fail(Err::BadDocument, "name count mismatch");
  return names;
}

}  // namespace

FiniteLattice FiniteLattice::from_up_sets(std::vector<Bitset> up, std::vector<std::string> names) {
  const int n = int(up.size());
  if (n == 0) fail(Err::NotALattice, "empty carrier");
  if (n > kConstructionCap)
    fail(Err::CapExceeded, "carrier of " + std::to_string(n) + " exceeds construction cap");

  FiniteLattice l;
  l.n_ = n;
  l.names_ = default_names(n, std::move(names));

  for (int i = 0; i < n; ++i) up[i].set(i);
  // reflexive-transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = up[i].first(); j >= 0; j = up[i].next(j))
        if (j != i && !up[j].is_subset_of(up[i])) {
          up[i] |= up[j];
          changed = true;
        }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        fail(Err::NotAPartialOrder, "antisymmetry fails between " + l.names_[i] + " and " + l.names_[j],
             {i, j});

  l.up_ = up;
  l.down_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = up[i].first(); j >= 0; j = up[i].next(j)) l.down_[j].set(i);

  // Topological ranking by longest chain; scanning up-sets in height order
  // makes the first set bit of an upper-bound set a minimal upper bound.
  l.height_.assign(n, 0);
  l.depth_.assign(n, 0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.down_[a].count() < l.down_[b].count(); });
  for (int x : order) {
    int h = 0;
    for (int y = l.down_[x].first(); y >= 0; y = l.down_[x].next(y))
      if (y != x) h = std::max(h, l.height_[y] + 1);
    l.height_[x] = h;
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.up_[a].count() < l.up_[b].count(); });
  for (int x : order) {
    int d = 0;
    for (int y = l.up_[x].first(); y >= 0; y = l.up_[x].next(y))
      if (y != x) d = std::max(d, l.depth_[y] + 1);
    l.depth_[x] = d;
  }

  // Join/meet existence for every pair. Permute bit order by height so the
  // first element of an up-set intersection is minimal in it.
  std::vector<int> by_height(n), pos(n);
  std::iota(by_height.begin(), by_height.end(), 0);
  std::sort(by_height.begin(), by_height.end(), [&](int a, int b) {
    return l.height_[a] != l.height_[b] ? l.height_[a] < l.height_[b] : a < b;
  });
  for (int i = 0; i < n; ++i) pos[by_height[i]] = i;
  std::vector<Bitset> up_perm(n, Bitset(n)), down_perm(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (l.up_[i].test(j)) up_perm[i].set(pos[j]);
      if (l.down_[i].test(j)) down_perm[i].set(pos[j]);
    }

  l.join_.assign(size_t(n) * n, -1);
  l.meet_.assign(size_t(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    l.join_[size_t(x) * n + x] = x;
    l.meet_[size_t(x) * n + x] = x;
    for (int y = x + 1; y < n; ++y) {
      Bitset ub = up_perm[x] & up_perm[y];
      int p = ub.first();
      if (p < 0)
        fail(Err::NotALattice, "no common upper bound of " + l.names_[x] + " and " + l.names_[y],
             {x, y});
      int z = by_height[p];
      if (!ub.is_subset_of(up_perm[z])) {
        // lowest member of ub not above z; incomparable to z, so no least bound
        int w = -1;
        for (int r = ub.next(p); r >= 0; r = ub.next(r))
          if (!up_perm[z].test(r)) {
            w = by_height[r];
            break;
          }
        fail(Err::NotALattice,
             "join of " + l.names_[x] + " and " + l.names_[y] + " is not unique", {x, y, z, w});
      }
      l.join_[size_t(x) * n + y] = l.join_[size_t(y) * n + x] = z;

      Bitset lb = down_perm[x] & down_perm[y];
      int pm = -1;
      for (int r = lb.first(); r >= 0; r = lb.next(r)) pm = r;  // highest position
      if (pm < 0)
        fail(Err::NotALattice, "no common lower bound of " + l.names_[x] + " and " + l.names_[y],
             {x, y});
      int zm = by_height[pm];
      if (!lb.is_subset_of(down_perm[zm])) {
        int w = -1;
        for (int r = lb.first(); r >= 0; r = lb.next(r))
          if (!down_perm[zm].test(r)) w = by_height[r];
        fail(Err::NotALattice,
             "meet of " + l.names_[x] + " and " + l.names_[y] + " is not unique", {x, y, zm, w});
      }
      l.meet_[size_t(x) * n + y] = l.meet_[size_t(y) * n + x] = zm;
    }
  }

  for (int i = 0; i < n; ++i) {
    if (l.down_[i].count() == 1) {
      if (l.bottom_ >= 0) fail(Err::NotALattice, "two minimal elements", {l.bottom_, i});
      l.bottom_ = i;
    }
    if (l.up_[i].count() == 1) {
      if (l.top_ >= 0) fail(Err::NotALattice, "two maximal elements", {l.top_, i});
      l.top_ = i;
    }
  }

  // covers = transitive reduction
  l.uppers_.assign(n, {});
  l.lowers_.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = l.up_[x].first(); y >= 0; y = l.up_[x].next(y)) {
      if (y == x) continue;
      bool cover = true;
      for (int z = l.up_[x].first(); z >= 0 && cover; z = l.up_[x].next(z))
        if (z != x && z != y && l.up_[z].test(y)) cover = false;
      if (cover) {
        l.covers_.emplace_back(x, y);
        l.uppers_[x].push_back(y);
        l.lowers_[y].push_back(x);
      }
    }
  std::sort(l.covers_.begin(), l.covers_.end());
  return l;
}

FiniteLattice FiniteLattice::from_order_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                                              std::vector<std::string> names) {
  std::vector<Bitset> up(n, Bitset(n));
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(Err::BadDocument, "pair index out of range");
    up[a].set(b);
  }
  return from_up_sets(std::move(up), std::move(names));
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                         std::vector<std::string> names) {
  return from_order_pairs(n, covers, std::move(names));
}

int FiniteLattice::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

FiniteLattice FiniteLattice::renamed(std::vector<std::string> names) const {
  if (int(names.size()) != n_) fail(Err::BadDocument, "name count mismatch");
  FiniteLattice l = *this;
  l.names_ = std::move(names);
  return l;
}

int FiniteLattice::join_of(const Bitset& s) const {
  int acc = bottom_;
  for (int i = s.first(); i >= 0; i = s.next(i)) acc = join(acc, i);
  return acc;
}

int FiniteLattice::meet_of(const Bitset& s) const {
  int acc = top_;
  for (int i = s.first(); i >= 0; i = s.next(i)) acc = meet(acc, i);
  return acc;
}

FiniteLattice dual(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (l.leq(j, i)) up[i].set(j);
  // up[i] currently holds the old down-set, which is the new up-set
  return FiniteLattice::from_up_sets(std::move(up), l.names());
}

Bitset generated_sublattice(const FiniteLattice& l, const Bitset& seed) {
  Bitset cur = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> elems = cur.to_vector();
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i + 1; j < elems.size(); ++j) {
        int a = l.join(elems[i], elems[j]);
        int b = l.meet(elems[i], elems[j]);
        if (!cur.test(a)) { cur.set(a); grew = true; }
        if (!cur.test(b)) { cur.set(b); grew = true; }
      }
  }
  return cur;
}

FiniteLattice sublattice(const FiniteLattice& l, const Bitset& carrier) {
  std::vector<int> elems = carrier.to_vector();
  if (elems.empty()) fail(Err::NotALattice, "empty carrier");
  const int m = int(elems.size());
  std::vector<int> back(l.size(), -1);
  for (int i = 0; i < m; ++i) back[elems[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (back[l.join(elems[i], elems[j])] < 0 || back[l.meet(elems[i], elems[j])] < 0)
        fail(Err::NotALattice, "carrier not closed under join/meet", {elems[i], elems[j]});
    }
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = l.name(elems[i]);
    for (int j = 0; j < m; ++j)
      if (l.leq(elems[i], elems[j])) up[i].set(j);
  }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

Bitset join_irreducibles(const FiniteLattice& l) {
  Bitset r(l.size());
  for (int i = 0; i < l.size(); ++i)
    if (l.lower_covers(i).size() == 1) r.set(i);
  return r;
}

Bitset meet_irreducibles(const FiniteLattice& l) {
  Bitset r(l.size());
  for (int i = 0; i < l.size(); ++i)
    if (l.upper_covers(i).size() == 1) r.set(i);
  return r;
}

Poset birkhoff_poset(const FiniteLattice& l) {
  if (auto w = distributivity_witness(l))
    fail(Err::NotDistributive,
         "not distributive at (" + l.name(w->x) + ", " + l.name(w->y) + ", " + l.name(w->z) + ")",
         {w->x, w->y, w->z});
  std::vector<int> ji = join_irreducibles(l).to_vector();
  Poset p;
  p.n = int(ji.size());
  p.up.assign(p.n, Bitset(p.n));
  for (int i = 0; i < p.n; ++i) {
    p.names.push_back(l.name(ji[i]));
    for (int j = 0; j < p.n; ++j)
      if (l.leq(ji[i], ji[j])) p.up[i].set(j);
  }
  return p;
}

FiniteLattice downset_lattice(const Poset& p) {
  if (p.n > 20) fail(Err::CapExceeded, "poset too large for down-set expansion");
  std::vector<uint32_t> down(p.n, 0);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.up[j].test(i)) down[i] |= uint32_t{1} << j;

  std::vector<uint32_t> sets;
  for (uint32_t s = 0; s < (uint32_t{1} << p.n); ++s) {
    bool closed = true;
    for (int i = 0; i < p.n && closed; ++i)
      if ((s >> i) & 1) closed = (down[i] & ~s) == 0;
    if (closed) sets.push_back(s);
    if (int(sets.size()) > kConstructionCap)
      fail(Err::CapExceeded, "down-set lattice exceeds construction cap");
  }
  std::sort(sets.begin(), sets.end(), [](uint32_t a, uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  const int m = int(sets.size());
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    std::string nm = "{";
    bool fst = true;
    for (int e = 0; e < p.n; ++e)
      if ((sets[i] >> e) & 1) {
        if (!fst) nm += ",";
        nm += p.names.empty() ? std::to_string(e) : p.names[e];
        fst = false;
      }
    nm += "}";
    names[i] = nm;
    for (int j = 0; j < m; ++j)
      if ((sets[i] & ~sets[j]) == 0) up[i].set(j);
  }
  return FiniteLattice::from_up_sets(std::move(up), std::move(names));
}

}  // namespace latkit
