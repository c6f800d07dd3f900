#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

struct TripleWitness {
  int x, y, z;
};

struct QuadWitness {
  int x, y, u, v;
};

// First triple (in index order) violating the distributive law
// x ^ (y v z) = (x ^ y) v (x ^ z), or nullopt.
std::optional<TripleWitness> distributivity_witness(const FiniteLattice& l);

// First triple with x <= z but x v (y ^ z) != (x v y) ^ z.
std::optional<TripleWitness> modularity_witness(const FiniteLattice& l);

inline bool is_distributive(const FiniteLattice& l) { return !distributivity_witness(l); }
inline bool is_modular(const FiniteLattice& l) { return !modularity_witness(l); }

// Pentagon sublattice as {bottom, side, lo, hi, top} with lo < hi on the
// chain side; present iff the lattice is non-modular.
std::optional<std::array<int, 5>> find_n5(const FiniteLattice& l);
// Diamond sublattice as {bottom, a, b, c, top}; present in every modular
// non-distributive lattice.
std::optional<std::array<int, 5>> find_m3(const FiniteLattice& l);

// Semidistributivity: x^y = x^z implies x^(yvz) = x^y (and dually).
std::optional<TripleWitness> semidistributivity_meet_witness(const FiniteLattice& l);
std::optional<TripleWitness> semidistributivity_join_witness(const FiniteLattice& l);
inline bool is_semidistributive_meet(const FiniteLattice& l) {
  return !semidistributivity_meet_witness(l);
}
inline bool is_semidistributive_join(const FiniteLattice& l) {
  return !semidistributivity_join_witness(l);
}

// Whitman's condition: x^y <= uvv implies one of x,y is below uvv or x^y is
// below one of u,v. Returns the first violating quadruple.
std::optional<QuadWitness> whitman_witness(const FiniteLattice& l);
inline bool whitman(const FiniteLattice& l) { return !whitman_witness(l); }

// Elements with at least two lower covers and at least two upper covers.
Bitset doubly_reducible(const FiniteLattice& l);

struct WidthResult {
  int width = 0;
  std::vector<int> antichain;  // one maximum antichain, ascending
};

// Maximum antichain size by minimum chain cover (bipartite matching); for
// |L| <= 12 the result is cross-checked against brute force and the witness
// is the lexicographically least maximum antichain.
WidthResult width(const FiniteLattice& l);

// Same, restricted to the induced suborder on `allowed`.
WidthResult max_antichain_within(const FiniteLattice& l, const Bitset& allowed);

// Maximum antichain among join- or meet-reducible elements; `interior`
// restricts the candidates (window boundaries have unreliable cover data).
WidthResult reducible_antichain_bound(const FiniteLattice& l, const Bitset* interior = nullptr);

// Finest way to write l as a stack of lattices: blocks partition the carrier,
// each block is a sublattice, and every element of an earlier block lies
// strictly below every element of a later one. Blocks returned bottom-up.
// Single block = linearly indecomposable.
std::vector<Bitset> linear_decomposition(const FiniteLattice& l);

}  // namespace latkit
