#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latkit/constructors.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Spanning-pair witnesses and finite-window checkers for the two rigidity
// results about 2 x Z inside semidistributive lattices: doubling a region
// through a spanning pair forces the 2 x chain shape, and a bounded reducible
// antichain turns a spanning pair into an embedded copy of 2 x Z.

enum class Unboundedness { verified, refuted, unverifiable };
const char* unboundedness_name(Unboundedness v);

// Witness over a materialized finite lattice; elements are indices.
struct SpanningPairWitness {
  int p = -1, q = -1;           // q must cover p
  std::vector<int> ascending;   // p_1 < p_2 < ... strictly above p
  std::vector<int> descending;  // q_1 > q_2 > ... strictly below q
};

// Witness over the infinite 2 x Z given by coordinates (i, k), i in {0, 1}.
// canonical = true means the chains follow the coordinate formulas
// p_m = (0, m), q_n = (1, -n) (mirrored when the order is dualized); that
// formula is the only structural unboundedness certificate the checker
// accepts, so explicit lists always report Unverifiable.
struct TwoByZWitness {
  std::pair<int, int> p{0, 0}, q{1, 0};
  std::vector<std::pair<int, int>> ascending, descending;
  bool canonical = false;
};

TwoByZWitness two_by_z_canonical(bool dualized = false);

// Resolves the canonical witness inside a materialized window; throws
// ElementOutOfWindow when the prefix runs past the window edge.
SpanningPairWitness canonical_window_witness(const TwoByZWindow& w, int prefix);

struct SpanningCheckReport {
  bool prefix_ok = false;
  std::string violation;       // first failing clause, empty when prefix_ok
  std::vector<int> violating;  // offending elements (coordinates flattened to i,k)
  Unboundedness unboundedness = Unboundedness::unverifiable;
  std::vector<int> refuting_bounds;  // lower bound of the q chain, upper bound of the p chain
};

// Violation clauses, in check order: "cover", "ascending", "descending",
// "q_below_ascending" (q <= p_m), "p_above_descending" (p >= q_n).
SpanningCheckReport verify_spanning_pair(const FiniteLattice& l, const SpanningPairWitness& w,
                                         int prefix);
SpanningCheckReport verify_spanning_pair(const TwoByZWitness& w, int prefix,
                                         bool dualized = false);

// Cover relation of the infinite 2 x Z straight from coordinates.
bool two_by_z_covers(std::pair<int, int> a, std::pair<int, int> b, bool dualized = false);

// Antichain hypothesis: every antichain of join- or meet-reducible elements
// has size at most n_claim. Reducibility is judged inside `interior` when
// given, because covers of boundary elements may live outside the window.
bool check_theorem6_hypothesis(const FiniteLattice& window, int n_claim,
                               const Bitset* interior = nullptr);
bool check_theorem6_hypothesis(const TwoByZWindow& w, int n_claim);

// A claimed embedding of the window {(i,k) : lo <= k <= hi} of 2 x Z into a
// target lattice; same layout as TwoByZWindow.
struct EmbeddingWindow {
  int lo = 0, hi = 0;
  std::vector<int> image;  // f(i,k) stored at (k - lo) * 2 + i
  int at(int i, int k) const { return image[std::size_t((k - lo) * 2 + i)]; }
};

struct Theorem6ConclusionReport {
  bool embedding_ok = false;  // injective, join/meet preserving inside the window
  bool covers_ok = false;     // f(0,k) covered by f(1,k) for interior k
  bool outside_ok = false;    // r outside the image, f(0,m) < r < f(1,n)
                              // forces r <= f(0,n) or f(1,m) <= r
  bool ok = false;
  std::string failing_clause;  // "embedding", "covers" or "outside"
  std::vector<int> witness;    // elements demonstrating the first failure
};

Theorem6ConclusionReport check_theorem6_conclusion(const FiniteLattice& l,
                                                   const EmbeddingWindow& f);

struct Theorem5Report {
  bool convex_ok = false;
  bool iso_ok = false;
  bool copy_pair_ok = false;
  bool premise_ok = false;
  bool conclusion_checked = false;  // only attempted when the premise holds
  bool conclusion_ok = false;       // l isomorphic to 2 x chain(chain_length)
  int chain_length = 0;
  std::string failing_clause;  // "convexity", "isomorphism" or "copy_pair"
};

// Premise bundle of the doubling rigidity theorem: c is a convex region of
// l_prime, iso maps l onto day_double(l_prime, c), and p, q land on the two
// copies of one region element. k_claim < 0 infers the chain length from |l|.
Theorem5Report check_theorem5_premise(const FiniteLattice& l, const FiniteLattice& l_prime,
                                      const Bitset& c, const std::vector<int>& iso, int p, int q,
                                      int k_claim = -1);

}  // namespace latkit
