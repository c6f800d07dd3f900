#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/config.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Triple {x, r, y} with x <= r <= y, x and y inside s, r outside; absent when
// s is convex. Deterministic: smallest r, then smallest x and y.
std::optional<std::array<int, 3>> convexity_witness(const FiniteLattice& l, const Bitset& s);

inline bool is_convex(const FiniteLattice& l, const Bitset& s) {
  return !convexity_witness(l, s).has_value();
}

struct DoublingSpec {
  Bitset region;          // convex subset C of the base lattice
  bool interval = false;  // region must equal [meet(C), join(C)]
};

// Doubling replaces each u in C by two copies (u,0) <= (u,1). Base indices
// survive unchanged (members of C become the lower copy); upper copies are
// appended in index order of C. projection erases the copy bit.
struct DoubleResult {
  FiniteLattice lattice;
  std::vector<int> lower_image;  // base -> new, lower copy inside C
  std::vector<int> upper_image;  // base -> new, upper copy inside C
  std::vector<int> projection;   // new -> base, surjective homomorphism
};

DoubleResult day_double(const FiniteLattice& l, const DoublingSpec& spec);

// Offending element of the region that is neither maximal nor minimal within
// the region yet fails to be doubly irreducible in l. When such an element
// exists, the doubled lattice cannot satisfy Whitman's condition.
std::optional<int> whitman_doubling_guard_witness(const FiniteLattice& l, const Bitset& region);

inline bool whitman_doubling_guard(const FiniteLattice& l, const Bitset& region) {
  return !whitman_doubling_guard_witness(l, region).has_value();
}

// Join-dependency digraph on join irreducibles: p -> q when q lies in some
// refinement-minimal nontrivial join cover of p. Computed by the equivalent
// pairwise test: p != q, p !<= q, and some x has p <= q v x but not
// p <= q* v x, where q* is the unique lower cover of q. Rows of elements
// that are not join irreducible stay empty. meet_dependency is the dual.
std::vector<std::vector<int>> join_dependency(const FiniteLattice& l);
std::vector<std::vector<int>> meet_dependency(const FiniteLattice& l);

// bounded iff both dependency digraphs are acyclic. The certificate is either
// a dependency cycle (first vertex not repeated) or, when bounded, one
// topological order per digraph listing every irreducible so that arrow
// targets appear before their sources.
struct BoundednessReport {
  bool bounded = false;
  std::vector<int> join_cycle;
  std::vector<int> meet_cycle;
  std::vector<int> join_order;
  std::vector<int> meet_order;
};

BoundednessReport boundedness_report(const FiniteLattice& l);

inline bool is_bounded(const FiniteLattice& l) { return boundedness_report(l).bounded; }

// Replayable doubling history: stages front is the 1-element lattice,
// day_double(stages[i], steps[i]).lattice equals stages[i+1] up to nothing
// (it is that lattice), and stages back is isomorphic to the searched target.
struct UndoubleSequence {
  std::vector<FiniteLattice> stages;
  std::vector<DoublingSpec> steps;
};

// Depth-first search over interval doublings starting from the 1-element
// lattice, largest interval first, deduplicating stages by canonical key.
// Absent means the whole search space was exhausted; running out of budget
// (counted in day_double calls) throws BudgetExceeded instead of guessing.
std::optional<UndoubleSequence> undouble_search(const FiniteLattice& l,
                                                long long budget = 1000000);

}  // namespace latkit
