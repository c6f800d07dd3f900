#include "latkit/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latkit/constructors.hpp"
#include "latkit/predicates.hpp"

namespace latkit {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x), y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep the smaller index as root
    parent[y] = x;
    return true;
  }
};

std::vector<int> reps_of(UnionFind& uf) {
  std::vector<int> rep(uf.parent.size());
  for (size_t x = 0; x < rep.size(); ++x) rep[x] = uf.find(int(x));
  return rep;
}

}  // namespace

// Merge the seed pairs, then propagate: every merged pair (x, y) forces
// (x^z, y^z) and (xvz, yvz) for all z. A path argument over processed merges
// shows the result is compatible; the explicit check below is a guard.
Congruence close_under_compatibility(const FiniteLattice& l,
                                     const std::vector<std::pair<int, int>>& seed) {
  int n = l.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : seed)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < n; ++z) {
      if (uf.unite(l.meet(x, z), l.meet(y, z))) work.emplace_back(l.meet(x, z), l.meet(y, z));
      if (uf.unite(l.join(x, z), l.join(y, z))) work.emplace_back(l.join(x, z), l.join(y, z));
    }
  }
  auto rep = reps_of(uf);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (rep[x] != rep[y]) continue;
      for (int z = 0; z < n; ++z)
        if (rep[l.meet(x, z)] != rep[l.meet(y, z)] || rep[l.join(x, z)] != rep[l.join(y, z)])
          throw Error(Err::Internal, "congruence closure missed a pair", {x, y, z});
    }
  int count = 0;
  for (int x = 0; x < n; ++x) count += rep[x] == x;
  return Congruence(std::move(rep), count);
}

Congruence Congruence::identity(const FiniteLattice& l) {
  return close_under_compatibility(l, {});
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(rep_.size(), -1);
  for (int x = 0; x < int(rep_.size()); ++x) {
    if (rep_[x] == x) {
      where[x] = int(out.size());
      out.emplace_back();
    }
    out[where[rep_[x]]].push_back(x);
  }
  return out;
}

Congruence principal_congruence(const FiniteLattice& l, int a, int b) {
  return close_under_compatibility(l, {{a, b}});
}

Congruence congruence_join(const FiniteLattice& l, const Congruence& c1, const Congruence& c2) {
  if (c1.size() != l.size() || c2.size() != l.size())
    throw Error(Err::CarrierMismatch, "congruence_join arguments live on different carriers");
  std::vector<std::pair<int, int>> seed;
  for (int x = 0; x < l.size(); ++x) {
    if (c1.rep(x) != x) seed.emplace_back(x, c1.rep(x));
    if (c2.rep(x) != x) seed.emplace_back(x, c2.rep(x));
  }
  return close_under_compatibility(l, seed);
}

QuotientResult quotient(const FiniteLattice& l, const Congruence& c) {
  if (c.size() != l.size())
    throw Error(Err::CarrierMismatch, "congruence lives on a different carrier");
  std::vector<int> class_of(l.size(), -1);
  std::vector<int> rep_elem;
  for (int x = 0; x < l.size(); ++x)
    if (c.rep(x) == x) {
      class_of[x] = int(rep_elem.size());
      rep_elem.push_back(x);
    }
  std::vector<int> proj(l.size());
  for (int x = 0; x < l.size(); ++x) proj[x] = class_of[c.rep(x)];

  int m = int(rep_elem.size());
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = l.name(rep_elem[i]);
    for (int j = 0; j < m; ++j) {
      // [x] <= [y] iff x^y ~ x; representative choice is immaterial by
      // compatibility
      int x = rep_elem[i], y = rep_elem[j];
      if (c.same(l.meet(x, y), x)) up[i].set(j);
    }
  }
  return QuotientResult{FiniteLattice::from_up_sets(std::move(up), std::move(names)),
                        std::move(proj)};
}

GeneratedHom hom_from_generators(const FiniteLattice& source, const FiniteLattice& target,
                                 const std::vector<int>& images) {
  int n = int(images.size());
  auto forms = free_distributive_normal_forms(n);
  if (int(forms.size()) != source.size())
    throw Error(Err::CarrierMismatch,
                "source is not the free distributive lattice on " + std::to_string(n) +
                    " generators");
  for (int g : images)
    if (g < 0 || g >= target.size()) throw Error(Err::UnknownElement, "image out of range", {g});

  GeneratedHom out;
  out.warning_non_distributive = distributivity_witness(target).has_value();
  out.map.resize(source.size());
  for (int e = 0; e < source.size(); ++e) {
    int acc = -1;
    for (uint32_t member : forms[e]) {
      int m = -1;
      for (int bit = 0; bit < n; ++bit)
        if (member >> bit & 1) m = m < 0 ? images[bit] : target.meet(m, images[bit]);
      acc = acc < 0 ? m : target.join(acc, m);
    }
    out.map[e] = acc;
  }
  return out;
}

Congruence kernel(const FiniteLattice& source, const FiniteLattice& target,
                  const std::vector<int>& f) {
  if (int(f.size()) != source.size())
    throw Error(Err::CarrierMismatch, "map does not cover the source");
  for (int v : f)
    if (v < 0 || v >= target.size()) throw Error(Err::UnknownElement, "image out of range", {v});
  for (int x = 0; x < source.size(); ++x)
    for (int y = x; y < source.size(); ++y) {
      if (f[source.join(x, y)] != target.join(f[x], f[y]) ||
          f[source.meet(x, y)] != target.meet(f[x], f[y]))
        throw Error(Err::NotAHomomorphism, "map does not respect join or meet", {x, y});
    }
  std::vector<std::pair<int, int>> seed;
  std::vector<int> first_with(target.size(), -1);
  for (int x = 0; x < source.size(); ++x) {
    if (first_with[f[x]] < 0)
      first_with[f[x]] = x;
    else
      seed.emplace_back(first_with[f[x]], x);
  }
  auto c = close_under_compatibility(source, seed);
  // equal-image partition of a homomorphism is already compatible; the
  // closure must not have merged anything new
  for (int x = 0; x < source.size(); ++x)
    for (int y = x + 1; y < source.size(); ++y)
      if (c.same(x, y) != (f[x] == f[y]))
        throw Error(Err::Internal, "kernel closure changed the partition", {x, y});
  return c;
}

}  // namespace latkit
