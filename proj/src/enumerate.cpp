#include "latkit/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "latkit/error.hpp"
#include "latkit/iso.hpp"

namespace latkit {
namespace {

// Small poset as reflexive up-masks, bit j of up[i] set iff i <= j.
// Enumeration states never exceed a handful of elements, so uint32 is ample.
using Masks = std::vector<uint32_t>;

std::vector<Bitset> to_bitsets(const Masks& up) {
  int k = int(up.size());
  std::vector<Bitset> out(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (up[i] >> j & 1) out[i].set(j);
  return out;
}

std::vector<uint64_t> key_of(const Masks& up) { return canonical_key(to_bitsets(up)); }

// True iff t (nonempty) has a least element under the mask order.
bool has_least(const Masks& up, uint32_t t) {
  for (uint32_t r = t; r;) {
    int i = std::countr_zero(r);
    r &= r - 1;
    if ((t & ~up[i]) == 0) return true;
  }
  return false;
}

FiniteLattice with_fresh_bottom(const Masks& st) {
  int k = int(st.size());
  std::vector<Bitset> ups(k + 1, Bitset(k + 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (st[i] >> j & 1) ups[i].set(j);
  for (int j = 0; j <= k; ++j) ups[k].set(j);
  return FiniteLattice::from_up_sets(std::move(ups));
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int n, int cap) {
  if (n < 1) fail(Err::CapExceeded, "lattice size must be positive");
  if (n > cap || n > 31)
    fail(Err::CapExceeded,
         "enumerate_lattices(" + std::to_string(n) + ") exceeds cap " + std::to_string(cap));
  if (n == 1) return {FiniteLattice::from_covers(1, {})};

  // A lattice minus its bottom is a join-semilattice with top; conversely a
  // fresh bottom under any finite join-semilattice with top yields a lattice
  // (meet = join of the common lower bounds, never empty). So: grow
  // join-semilattices with top to n-1 elements by repeatedly attaching a new
  // minimal element below an up-closed subset, dedupe by canonical key.
  int m = n - 1;
  std::map<std::vector<uint64_t>, Masks> level;
  level.emplace(key_of({1u}), Masks{1u});

  for (int k = 1; k < m; ++k) {
    std::map<std::vector<uint64_t>, Masks> next;
    for (const auto& [key, st] : level) {
      for (uint32_t u = 1; u < (1u << k); ++u) {
        // u must be up-closed; joins with the new element are least elements
        // of u & up[a], which always contains the old top.
        bool ok = true;
        for (uint32_t r = u; r && ok;) {
          int i = std::countr_zero(r);
          r &= r - 1;
          ok = (st[i] & ~u) == 0;
        }
        for (int a = 0; a < k && ok; ++a) ok = has_least(st, u & st[a]);
        if (!ok) continue;
        Masks ext = st;
        ext.push_back(u | (1u << k));
        auto kk = key_of(ext);
        next.emplace(std::move(kk), std::move(ext));
      }
    }
    level = std::move(next);
  }

  std::vector<FiniteLattice> out;
  out.reserve(level.size());
  for (const auto& [key, st] : level) out.push_back(with_fresh_bottom(st));
  return out;
}

std::vector<FiniteLattice> enumerate_distributive_lattices(int max_size) {
  if (max_size < 1) return {};
  if (max_size > 64) fail(Err::CapExceeded, "distributive enumeration capped at 64 elements");

  // Birkhoff: distributive lattices of size s correspond to posets with s
  // down-sets. Grow posets one maximal element at a time (strictly-below set
  // = any down-set); removing a maximal element never increases the down-set
  // count, so pruning at max_size is exhaustive-safe.
  struct Entry {
    Masks down;  // down[i] = {j : j <= i}, reflexive
    std::vector<uint32_t> downsets;
  };

  auto downsets_of = [](const Masks& down) {
    int k = int(down.size());
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << k); ++s) {
      bool closed = true;
      for (uint32_t r = s; r && closed;) {
        int i = std::countr_zero(r);
        r &= r - 1;
        closed = (down[i] & ~s) == 0;
      }
      if (closed) out.push_back(s);
    }
    return out;
  };

  auto key_of_down = [](const Masks& down) {
    // canonical_key expects up-sets; transpose.
    int k = int(down.size());
    std::vector<Bitset> up(k, Bitset(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (down[i] >> j & 1) up[j].set(i);
    return canonical_key(up);
  };

  std::map<std::vector<uint64_t>, Entry> all;
  Entry empty{{}, {0u}};
  all.emplace(key_of_down(empty.down), empty);
  std::vector<Entry> frontier{empty};

  while (!frontier.empty()) {
    std::vector<Entry> grown;
    for (const Entry& e : frontier) {
      int k = int(e.down.size());
      if (k + 1 >= 31) continue;
      for (uint32_t d : e.downsets) {
        Masks down = e.down;
        down.push_back(d | (1u << k));
        auto ds = downsets_of(down);
        if (int(ds.size()) > max_size) continue;
        auto key = key_of_down(down);
        if (all.count(key)) continue;
        Entry ne{std::move(down), std::move(ds)};
        all.emplace(std::move(key), ne);
        grown.push_back(std::move(ne));
      }
    }
    frontier = std::move(grown);
  }

  std::vector<FiniteLattice> out;
  for (const auto& [key, e] : all) {
    int k = int(e.down.size());
    Poset p;
    p.n = k;
    p.up.assign(k, Bitset(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (e.down[i] >> j & 1) p.up[j].set(i);
    out.push_back(downset_lattice(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

}  // namespace latkit
