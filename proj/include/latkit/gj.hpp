#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

enum class SharedBound { meet, join, both };
enum class GadgetClass { case1, case2, case3, case1_dual, case2_dual, case3_dual };

const char* shared_bound_name(SharedBound b);
const char* gadget_class_name(GadgetClass c);  // "case1" .. "case3-dual"

// A gadget triple: q < r, p incomparable to both, and at least one of
// p^q = p^r, pvq = pvr. generated is the closure of {p,q,r}; iso_class is
// decided by a generator-pinned isomorphism onto one of the six labeled
// shapes (the three transcribed fixtures and their duals, the dual shapes
// taking the triple with the chain reversed).
struct GadgetWitness {
  int p = -1, q = -1, r = -1;
  SharedBound shared_bound = SharedBound::meet;
  Bitset generated;
  GadgetClass iso_class = GadgetClass::case1;
};

// Every gadget triple, ascending by (p, q, r). Throws UnclassifiableGadget
// when a closure matches none of the six shapes.
std::vector<GadgetWitness> find_gadgets(const FiniteLattice& l);

// Boolean generation from an antichain: when `a` has at least two elements,
// is an antichain, all pairwise meets coincide, and the closure really is
// the 2^|a| element boolean lattice, returns that closure as a lattice.
// Absent on any failed condition.
std::optional<FiniteLattice> boolean_from_antichain(const FiniteLattice& l, const Bitset& a);

enum class BlockShape { singleton, cube, two_by_chain };

const char* block_shape_name(BlockShape s);

struct BlockTag {
  Bitset elements;       // carrier of the block inside the decomposed lattice
  BlockShape shape = BlockShape::singleton;
  int chain_length = 0;  // k when the block is 2 x chain(k)
  Poset evidence;        // the block's poset of join irreducibles
};

struct GJDecomposition {
  std::vector<BlockTag> blocks;  // bottom-up
};

// Tags every block of the finest linear decomposition as a singleton, the
// 8-element cube, or 2 x chain(k), deciding by the shape of the block's
// join-irreducible poset (empty; 3-antichain; isolated point plus a chain)
// and certifying each tag by isomorphism. Absent when some block fits no
// shape; with require_no_doubly_reducible set, any doubly reducible element
// short-circuits to absent. Throws NotDistributive otherwise.
std::optional<GJDecomposition> theorem2_decompose(const FiniteLattice& l,
                                                  bool require_no_doubly_reducible = true);

enum class EmbedVerdict { embeddable, not_embeddable, out_of_scope };

const char* embed_verdict_name(EmbedVerdict v);

struct FreeEmbedReport {
  EmbedVerdict verdict = EmbedVerdict::out_of_scope;
  std::optional<GJDecomposition> decomposition;  // present when embeddable
  // "" | "not_distributive" | "doubly_reducible" | "non_conforming_block"
  std::string reason;
  std::vector<int> evidence;  // offending elements, when any
};

// Decides membership among sublattices of free lattices for finite
// distributive input; non-distributive input is out of scope and the report
// carries the distributivity witness as evidence.
FreeEmbedReport decide_free_embeddable(const FiniteLattice& l);

}  // namespace latkit
