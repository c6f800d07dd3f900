#pragma once

#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Partition of a lattice's elements that is compatible with join and meet:
// x ~ y implies x^z ~ y^z and xvz ~ yvz. Compatibility is verified whenever
// an instance is built; instances are immutable afterwards.
class Congruence {
public:
  static Congruence identity(const FiniteLattice& l);

  int size() const { return int(rep_.size()); }
  // Smallest element index in x's class.
  int rep(int x) const { return rep_[x]; }
  bool same(int x, int y) const { return rep_[x] == rep_[y]; }
  int class_count() const { return class_count_; }
  // Classes sorted by their representative; members ascending.
  std::vector<std::vector<int>> classes() const;

private:
  friend Congruence close_under_compatibility(const FiniteLattice&,
                                              const std::vector<std::pair<int, int>>&);
  Congruence(std::vector<int> rep, int count) : rep_(std::move(rep)), class_count_(count) {}

  std::vector<int> rep_;
  int class_count_ = 0;
};

// Least congruence identifying a and b: union-find fixpoint that keeps
// merging (x^z, y^z) and (xvz, yvz) for every merged pair (x, y).
Congruence principal_congruence(const FiniteLattice& l, int a, int b);

// Least congruence containing both. Throws CarrierMismatch when the two
// partitions live on different carriers.
Congruence congruence_join(const FiniteLattice& l, const Congruence& c1, const Congruence& c2);

struct QuotientResult {
  FiniteLattice lattice;
  std::vector<int> projection;  // element of l -> element of the quotient
};

// Classes become elements, ordered by [x] <= [y] iff x^y ~ x; the projection
// is a surjective homomorphism. Class names are taken from the class
// representative.
QuotientResult quotient(const FiniteLattice& l, const Congruence& c);

struct GeneratedHom {
  std::vector<int> map;  // source element -> target element
  // The join-of-meets evaluation is only guaranteed to be a homomorphism
  // into distributive targets; set when the target is not distributive.
  bool warning_non_distributive = false;
};

// Evaluate every element of free_distributive(images.size()) at the given
// generator images. The source must be that free lattice (same element
// order); anything else is rejected.
GeneratedHom hom_from_generators(const FiniteLattice& source, const FiniteLattice& target,
                                 const std::vector<int>& images);

// Partition of the source by equal image under f, which must be a lattice
// homomorphism source -> target; throws NotAHomomorphism with a witness pair
// otherwise.
Congruence kernel(const FiniteLattice& source, const FiniteLattice& target,
                  const std::vector<int>& f);

}  // namespace latkit
