#pragma once

#include <vector>

#include "latkit/config.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// All lattices with exactly n elements, one per isomorphism class, in a
// deterministic order. Built by extending join-semilattices-with-top downward
// one minimal element at a time (a lattice minus its bottom is such a
// semilattice), deduplicating by canonical key. Throws CapExceeded when
// n > cap; the default cap keeps runtimes interactive.
std::vector<FiniteLattice> enumerate_lattices(int n, int cap = kEnumerateDefaultCap);

// All distributive lattices with at most max_size elements, one per iso
// class, ordered by size. Enumerates posets with at most max_size down-sets
// (pruned incrementally) and takes their down-set lattices.
std::vector<FiniteLattice> enumerate_distributive_lattices(int max_size);

}  // namespace latkit
