#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/config.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Lattice term tree. Nodes are immutable and shared; build with the factory
// helpers below.
struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Op { var, join, meet };
  Op op = Op::var;
  std::string name;  // op == var
  Term lhs, rhs;     // op != var
};

Term term_var(std::string name);
Term term_join(Term a, Term b);
Term term_meet(Term a, Term b);

int term_size(const Term& t);
// Sorted, deduplicated variable names.
std::vector<std::string> term_variables(const Term& t);

// "x^(y v z)": meet is ^, join is v, parentheses exactly where the operator
// changes. parse_term accepts the same syntax and requires parentheses for
// mixed operators; runs of one operator associate to the left.
std::string format_term(const Term& t);
Term parse_term(std::string_view src);

int evaluate(const Term& t, const FiniteLattice& l, const std::map<std::string, int>& assignment);

struct IdentitySpec {
  Term left, right;
  std::vector<std::string> variables;  // sorted union of both sides
};

IdentitySpec make_identity(Term left, Term right);
// "lhs = rhs" with term syntax on both sides.
IdentitySpec parse_identity(std::string_view src);

struct IdentityCheck {
  bool holds = false;
  // lexicographically least failing assignment, keyed by variable, empty
  // when the identity holds
  std::map<std::string, int> witness;
};

// Exhaustive scan over all |L|^k assignments; k is capped (default 4) to
// keep the scan sub-second.
IdentityCheck check_identity(const FiniteLattice& l, const IdentitySpec& spec);

enum class SdPolarity { meet, join };

// The level-n semidistributivity identity. For meet polarity this is
// x^(y v z) = x^y_n with y_0 = y, z_0 = z, y_{k+1} = y v (x^z_k),
// z_{k+1} = z v (x^y_k); join polarity is the dual.
IdentitySpec sd_identity(int n, SdPolarity polarity);

// Least n <= max_n with both level-n identities holding, or absent.
std::optional<int> sd_level(const FiniteLattice& l, int max_n = kSdLevelDefaultMax);

struct VarietySpec {
  enum class Kind { distributive, sd_meet, sd_join, sd_both } kind = Kind::distributive;
  int level = 0;  // sd kinds only
  std::vector<IdentitySpec> identities() const;
};

struct ExploreResult {
  int class_count = 0;
  // one representative term per separated class, in discovery order
  std::vector<Term> representatives;
  // class counts after each growth round, counts_by_depth[d] = classes using
  // terms of depth <= d
  std::vector<int> counts_by_depth;
};

// Certified lower bound on the size of the relatively free lattice of the
// variety on `generators` generators: count term classes separated by
// evaluation on the probe lattices, growing terms to the depth bound. Probes
// must satisfy the variety's identities (ProbeOutsideVariety otherwise).
// Generators are named "x1".."xn". Deterministic for a fixed probe list.
ExploreResult explore_relatively_free(const VarietySpec& variety, int generators, int depth,
                                      const std::vector<FiniteLattice>& probes);

}  // namespace latkit
