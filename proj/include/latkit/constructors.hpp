#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Names "0".."n-1" bottom-up.
FiniteLattice chain_lattice(int n);

// Subsets of {1..n} ordered by inclusion; element names "0", "a1", "a1va2", ...
FiniteLattice boolean_lattice(int n);

// Componentwise order; names "(x,y)".
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

// Stack blocks bottom-up: every element of an earlier block below every
// element of a later one. Names "i:name"; a single block is returned as-is.
FiniteLattice linear_sum(const std::vector<FiniteLattice>& blocks);

// Blocks indexed by a poset: (i,x) <= (j,y) iff i < j in the index or i = j
// and x <= y in the block. The result is validated; a non-chain index
// usually fails the lattice axioms.
FiniteLattice lexicographic_sum(const Poset& index, const std::vector<FiniteLattice>& blocks);

// Free distributive lattice on n generators (1 <= n <= 4), elements in
// join-of-meets normal form: antichains of nonempty generator subsets,
// A <= B iff every member of A contains some member of B. Generators are
// named "a".."d"; other elements get term names like "(a^b) v c".
FiniteLattice free_distributive(int n);

// The antichain behind each element of free_distributive(n), aligned with its
// element indices; each antichain is an ascending list of generator masks.
std::vector<std::vector<uint32_t>> free_distributive_normal_forms(int n);

// Hardcoded figure transcriptions; see fixture_names() for the catalog.
FiniteLattice fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

// Finite window {(i,k) : i in {0,1}, lo <= k <= hi} of the full 2 x Z, with
// the coordinate map retained. The window is a sublattice, not an interval,
// of the infinite whole: covers at k = lo, hi are unreliable there.
struct TwoByZWindow {
  FiniteLattice lattice;
  int lo = 0, hi = 0;

  int index(int i, int k) const { return (k - lo) * 2 + i; }
  std::pair<int, int> coords(int e) const { return {e % 2, e / 2 + lo}; }
  Bitset interior() const;
};
TwoByZWindow two_by_z_window(int lo, int hi);

}  // namespace latkit
