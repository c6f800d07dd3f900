#pragma once

#include <cstdint>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/lattice.hpp"

namespace testutil {

inline latkit::FiniteLattice lat_from_masks(const std::vector<uint32_t>& up_masks) {
  const int n = int(up_masks.size());
  std::vector<latkit::Bitset> up(n, latkit::Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (up_masks[i] >> j & 1) up[i].set(j);
  return latkit::FiniteLattice::from_up_sets(std::move(up));
}

inline latkit::Bitset set_of(int n, std::initializer_list<int> elems) {
  latkit::Bitset b(n);
  for (int e : elems) b.set(e);
  return b;
}

// Covers of the five-element pentagon: bottom 0, chain side 1 < 2, lone 3, top 4.
inline latkit::FiniteLattice pentagon() {
  return latkit::FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

// Covers of the five-element diamond: bottom 0, atoms 1,2,3, top 4.
inline latkit::FiniteLattice diamond() {
  return latkit::FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace testutil
