#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/bitset.hpp"
#include "latkit/error.hpp"

namespace latkit {

// Finite poset: reflexive leq stored as up-sets. Used for Birkhoff duals and
// as the index of lexicographic sums.
struct Poset {
  int n = 0;
  std::vector<std::string> names;
  std::vector<Bitset> up;  // up[i] = {j : i <= j}, includes i

  bool leq(int x, int y) const { return up[x].test(y); }
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                          std::vector<std::string> names = {});
};

// Immutable finite lattice over elements 0..n-1. Construction always runs the
// full validation pass: order axioms, existence of all binary joins and meets,
// cover (transitive reduction) extraction and dense operation tables. Any
// failure throws Error with a witness.
class FiniteLattice {
public:
  static FiniteLattice from_up_sets(std::vector<Bitset> up, std::vector<std::string> names = {});
  static FiniteLattice from_order_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                                        std::vector<std::string> names = {});
  // Cover pairs are just generators of the order here; the stored cover list
  // is recomputed as the transitive reduction.
  static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                   std::vector<std::string> names = {});

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }
  int join(int x, int y) const { return join_[size_t(x) * n_ + y]; }
  int meet(int x, int y) const { return meet_[size_t(x) * n_ + y]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& down_set(int x) const { return down_[x]; }

  // Covers as (lower, upper) pairs, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return uppers_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lowers_[x]; }

  // Longest-chain rank from the bottom / to the top.
  int height(int x) const { return height_[x]; }
  int depth(int x) const { return depth_[x]; }

  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  // Index of the named element, or -1.
  int index_of(std::string_view name) const;
  // Same carrier, different labels.
  FiniteLattice renamed(std::vector<std::string> names) const;

  // Fold over a subset; empty set folds to bottom (join) / top (meet).
  int join_of(const Bitset& s) const;
  int meet_of(const Bitset& s) const;

private:
  FiniteLattice() = default;

  int n_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<Bitset> up_, down_;
  std::vector<int> join_, meet_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> uppers_, lowers_;
  std::vector<int> height_, depth_;
  std::vector<std::string> names_;
};

FiniteLattice dual(const FiniteLattice& l);

// Least sublattice containing the seed (join/meet closure; empty seed gives
// the empty set).
Bitset generated_sublattice(const FiniteLattice& l, const Bitset& seed);

// Restriction of the order to a subset that is closed under join and meet.
// Element i of the result is the i-th member of `carrier` in index order.
FiniteLattice sublattice(const FiniteLattice& l, const Bitset& carrier);

// Exactly one lower (resp. upper) cover; bottom and top never qualify.
Bitset join_irreducibles(const FiniteLattice& l);
Bitset meet_irreducibles(const FiniteLattice& l);

// Poset of join-irreducibles. Throws NotDistributive when l is not
// distributive, since the round-trip below only holds there.
Poset birkhoff_poset(const FiniteLattice& l);

// Lattice of down-sets of p ordered by inclusion. downset_lattice(birkhoff_poset(l))
// is isomorphic to l for distributive l.
FiniteLattice downset_lattice(const Poset& p);

}  // namespace latkit
