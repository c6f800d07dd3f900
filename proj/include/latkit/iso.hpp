#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Order isomorphism a -> b as an element map, or nullopt. Backtracking search
// seeded by structural invariants (height, cover degrees, irreducibility).
// Throws SizeGuard when either side exceeds `cap` (default iso_cap()).
std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                                              int cap = -1);

// Canonical certificate of the order up to isomorphism: two posets/lattices
// get equal keys iff they are isomorphic. Intended for dedup during
// enumeration; cost is exponential in principle but tame at enumeration sizes.
std::vector<uint64_t> canonical_key(const std::vector<Bitset>& up);
std::vector<uint64_t> canonical_key(const FiniteLattice& l);
std::vector<uint64_t> canonical_key(const Poset& p);

}  // namespace latkit
