#include "latkit/gj.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latkit/constructors.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/iso.hpp"
#include "latkit/predicates.hpp"
#include "latkit/terms.hpp"
#include "oracles.hpp"

using namespace latkit;

namespace {

std::map<GadgetClass, int> census(const std::vector<GadgetWitness>& ws) {
  std::map<GadgetClass, int> c;
  for (auto& w : ws) ++c[w.iso_class];
  return c;
}

GadgetClass dual_class(GadgetClass c) {
  switch (c) {
    case GadgetClass::case1: return GadgetClass::case1;  // pentagon shape is self dual
    case GadgetClass::case2: return GadgetClass::case2_dual;
    case GadgetClass::case2_dual: return GadgetClass::case2;
    case GadgetClass::case3: return GadgetClass::case3_dual;
    case GadgetClass::case3_dual: return GadgetClass::case3;
    case GadgetClass::case1_dual: return GadgetClass::case1;
  }
  return c;
}

// the nine elements of the free lattice over {a, b<c}, as terms keyed by the
// fixture's element names
const std::vector<std::pair<std::string, std::string>>& free_over_1_plus_2_terms() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"a", "a"},           {"b", "b"},
      {"c", "c"},           {"a^b", "a^b"},
      {"a^c", "a^c"},       {"(a^c)vb", "(a^c) v b"},
      {"(avb)^c", "(a v b)^c"},
      {"avb", "a v b"},     {"avc", "a v c"},
  };
  return t;
}

}  // namespace

TEST_CASE("the pentagon carries exactly one gadget, of the first kind") {
  auto n5 = fixture("n5");
  auto ws = find_gadgets(n5);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].p == n5.index_of("c"));
  CHECK(ws[0].q == n5.index_of("a"));
  CHECK(ws[0].r == n5.index_of("b"));
  CHECK(ws[0].shared_bound == SharedBound::both);
  CHECK(ws[0].generated.count() == 5);
  CHECK(ws[0].iso_class == GadgetClass::case1);
}

TEST_CASE("2x3 carries the textbook second-kind gadget") {
  auto l = product(chain_lattice(2), chain_lattice(3));
  int p = l.index_of("(1,0)"), q = l.index_of("(0,1)"), r = l.index_of("(0,2)");
  REQUIRE(p >= 0);
  auto ws = find_gadgets(l);
  bool found = false;
  for (auto& w : ws)
    if (w.p == p && w.q == q && w.r == r) {
      found = true;
      CHECK(w.shared_bound == SharedBound::meet);
      CHECK(w.iso_class == GadgetClass::case2);
      CHECK(w.generated.count() == 6);  // the whole lattice
    }
  CHECK(found);
  for (auto& w : ws)
    CHECK((w.iso_class == GadgetClass::case2 || w.iso_class == GadgetClass::case2_dual));
}

TEST_CASE("chains and the diamond carry no gadgets") {
  CHECK(find_gadgets(chain_lattice(5)).empty());
  CHECK(find_gadgets(chain_lattice(1)).empty());
  // the diamond has no comparable pair q < r avoiding the bounds
  CHECK(find_gadgets(fixture("m3")).empty());
}

TEST_CASE("fixture triples classify as their own shape") {
  struct Want {
    const char* name;
    GadgetClass cls;
    GadgetClass dual_cls;
  } wants[] = {
      {"gadget_case1", GadgetClass::case1, GadgetClass::case1},
      {"gadget_case2", GadgetClass::case2, GadgetClass::case2_dual},
      {"gadget_case3", GadgetClass::case3, GadgetClass::case3_dual},
  };
  for (auto& want : wants) {
    auto f = fixture(want.name);
    int p = f.index_of("p"), q = f.index_of("q"), r = f.index_of("r");
    bool found = false;
    for (auto& w : find_gadgets(f))
      if (w.p == p && w.q == q && w.r == r) {
        found = true;
        CHECK(w.iso_class == want.cls);
        CHECK(int(w.generated.count()) == f.size());
      }
    CHECK(found);

    auto d = dual(f);
    bool dual_found = false;
    for (auto& w : find_gadgets(d))
      if (w.p == p && w.q == r && w.r == q) {  // the chain flips under duality
        dual_found = true;
        CHECK(w.iso_class == want.dual_cls);
      }
    CHECK(dual_found);
  }
}

TEST_CASE("gadgets in small distributive lattices are all of the second kind") {
  for (auto& l : enumerate_distributive_lattices(8))
    for (auto& w : find_gadgets(l)) {
      CHECK((w.iso_class == GadgetClass::case2 || w.iso_class == GadgetClass::case2_dual));
      CHECK(w.generated.count() == 6);
      CHECK(w.shared_bound ==
            (w.iso_class == GadgetClass::case2 ? SharedBound::meet : SharedBound::join));
    }
}

TEST_CASE("dualizing a lattice dualizes its gadget list") {
  std::vector<FiniteLattice> corpus;
  corpus.push_back(fixture("n5"));
  corpus.push_back(fixture("fl_1_2"));
  corpus.push_back(product(chain_lattice(2), chain_lattice(3)));
  corpus.push_back(boolean_lattice(3));
  corpus.push_back(fixture("gadget_case3"));
  for (int n = 5; n <= 6; ++n)
    for (auto& l : enumerate_lattices(n)) corpus.push_back(l);

  for (auto& l : corpus) {
    auto primal = find_gadgets(l);
    auto dualized = find_gadgets(dual(l));
    std::set<std::tuple<int, int, int, int>> want, got;
    for (auto& w : primal)
      want.insert({w.p, w.r, w.q, int(dual_class(w.iso_class))});
    for (auto& w : dualized) got.insert({w.p, w.q, w.r, int(w.iso_class)});
    CHECK(want == got);
  }
}

TEST_CASE("every gadget is an order-respecting image of the nine-element free lattice") {
  auto fl = fixture("fl_1_2");
  std::vector<Term> terms(fl.size());
  for (auto& [name, expr] : free_over_1_plus_2_terms()) {
    int i = fl.index_of(name);
    REQUIRE(i >= 0);
    terms[i] = parse_term(expr);
  }

  std::vector<FiniteLattice> corpus;
  corpus.push_back(fixture("n5"));
  corpus.push_back(product(chain_lattice(2), chain_lattice(3)));
  corpus.push_back(fixture("gadget_case3"));
  corpus.push_back(dual(fixture("gadget_case3")));
  for (auto& l : enumerate_distributive_lattices(7)) corpus.push_back(l);

  for (auto& l : corpus)
    for (auto& w : find_gadgets(l)) {
      std::map<std::string, int> env{{"a", w.p}, {"b", w.q}, {"c", w.r}};
      std::vector<int> img(fl.size());
      Bitset image_set(l.size());
      for (int x = 0; x < fl.size(); ++x) {
        img[x] = evaluate(terms[x], l, env);
        image_set.set(img[x]);
      }
      CHECK(image_set == w.generated);
      for (int x = 0; x < fl.size(); ++x)
        for (int y = 0; y < fl.size(); ++y) {
          CHECK(img[fl.join(x, y)] == l.join(img[x], img[y]));
          CHECK(img[fl.meet(x, y)] == l.meet(img[x], img[y]));
        }
    }
}

TEST_CASE("boolean generation from antichains") {
  auto b3 = boolean_lattice(3);
  auto cube = boolean_from_antichain(b3, testutil::set_of(8, {1, 2, 4}));
  REQUIRE(cube.has_value());
  CHECK(cube->size() == 8);
  CHECK(is_isomorphic(*cube, b3).has_value());

  auto b4 = boolean_lattice(4);
  Bitset atoms4(16);
  for (int a : {1, 2, 4, 8}) atoms4.set(a);
  auto hyper = boolean_from_antichain(b4, atoms4);
  REQUIRE(hyper.has_value());
  CHECK(is_isomorphic(*hyper, b4).has_value());

  // comparable pair: not an antichain
  CHECK_FALSE(boolean_from_antichain(chain_lattice(4), testutil::set_of(4, {1, 2})).has_value());
  // fewer than two elements never qualifies
  CHECK_FALSE(boolean_from_antichain(b3, testutil::set_of(8, {1})).has_value());
  CHECK_FALSE(boolean_from_antichain(b3, Bitset(8)).has_value());

  // two diamond atoms close into a square, all three close into the diamond
  auto m3 = fixture("m3");
  auto square = boolean_from_antichain(m3, testutil::set_of(5, {1, 2}));
  REQUIRE(square.has_value());
  CHECK(is_isomorphic(*square, boolean_lattice(2)).has_value());
  CHECK_FALSE(boolean_from_antichain(m3, testutil::set_of(5, {1, 2, 3})).has_value());

  // mismatched meets: coatoms of boolean(3) meet pairwise in distinct atoms
  CHECK_FALSE(boolean_from_antichain(b3, testutil::set_of(8, {3, 5, 6})).has_value());
  // but two coatoms share a meet and close into a square
  auto sq2 = boolean_from_antichain(b3, testutil::set_of(8, {3, 5}));
  REQUIRE(sq2.has_value());
  CHECK(is_isomorphic(*sq2, boolean_lattice(2)).has_value());
}

TEST_CASE("block classification of stacked distributive lattices") {
  auto dec = theorem2_decompose(chain_lattice(4));
  REQUIRE(dec.has_value());
  CHECK(dec->blocks.size() == 4);
  for (auto& b : dec->blocks) CHECK(b.shape == BlockShape::singleton);

  auto cube = theorem2_decompose(boolean_lattice(3));
  REQUIRE(cube.has_value());
  REQUIRE(cube->blocks.size() == 1);
  CHECK(cube->blocks[0].shape == BlockShape::cube);
  CHECK(cube->blocks[0].evidence.n == 3);

  auto ladder = theorem2_decompose(product(chain_lattice(2), chain_lattice(4)));
  REQUIRE(ladder.has_value());
  REQUIRE(ladder->blocks.size() == 1);
  CHECK(ladder->blocks[0].shape == BlockShape::two_by_chain);
  CHECK(ladder->blocks[0].chain_length == 4);

  auto mixed = theorem2_decompose(
      linear_sum({chain_lattice(1), boolean_lattice(3),
                  product(chain_lattice(2), chain_lattice(4))}));
  REQUIRE(mixed.has_value());
  REQUIRE(mixed->blocks.size() == 3);
  CHECK(mixed->blocks[0].shape == BlockShape::singleton);
  CHECK(mixed->blocks[1].shape == BlockShape::cube);
  CHECK(mixed->blocks[2].shape == BlockShape::two_by_chain);
  CHECK(mixed->blocks[2].chain_length == 4);
  // blocks partition the carrier bottom-up
  int seen = 0;
  for (auto& b : mixed->blocks) seen += b.elements.count();
  CHECK(seen == 17);

  CHECK_FALSE(theorem2_decompose(product(boolean_lattice(2), chain_lattice(3))).has_value());
  CHECK_FALSE(
      theorem2_decompose(product(boolean_lattice(2), chain_lattice(3)), false).has_value());
  CHECK_FALSE(theorem2_decompose(boolean_lattice(4)).has_value());

  try {
    theorem2_decompose(fixture("n5"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NotDistributive);
  }
}

TEST_CASE("decomposability coincides with the absence of doubly reducible elements") {
  for (auto& l : enumerate_distributive_lattices(8)) {
    bool clean = doubly_reducible(l).none();
    auto gated = theorem2_decompose(l, true);
    auto shape_only = theorem2_decompose(l, false);
    CHECK(gated.has_value() == clean);
    CHECK(shape_only.has_value() == clean);
    if (!gated) continue;
    int covered = 0;
    for (auto& b : gated->blocks) {
      covered += b.elements.count();
      int sz = b.elements.count();
      if (b.shape == BlockShape::singleton) CHECK(sz == 1);
      if (b.shape == BlockShape::cube) CHECK(sz == 8);
      if (b.shape == BlockShape::two_by_chain) CHECK(sz == 2 * b.chain_length);
    }
    CHECK(covered == l.size());
  }
}

TEST_CASE("free embeddability verdicts") {
  auto cube = decide_free_embeddable(boolean_lattice(3));
  CHECK(cube.verdict == EmbedVerdict::embeddable);
  REQUIRE(cube.decomposition.has_value());
  CHECK(cube.decomposition->blocks.size() == 1);
  CHECK(cube.decomposition->blocks[0].shape == BlockShape::cube);

  auto b4 = decide_free_embeddable(boolean_lattice(4));
  CHECK(b4.verdict == EmbedVerdict::not_embeddable);
  CHECK(b4.reason == "doubly_reducible");
  CHECK_FALSE(b4.evidence.empty());
  for (int e : b4.evidence) {
    CHECK(boolean_lattice(4).lower_covers(e).size() >= 2);
    CHECK(boolean_lattice(4).upper_covers(e).size() >= 2);
  }

  auto grid = decide_free_embeddable(product(boolean_lattice(2), chain_lattice(3)));
  CHECK(grid.verdict == EmbedVerdict::not_embeddable);
  CHECK(grid.reason == "doubly_reducible");

  auto pent = decide_free_embeddable(fixture("n5"));
  CHECK(pent.verdict == EmbedVerdict::out_of_scope);
  CHECK(pent.reason == "not_distributive");
  CHECK(pent.evidence.size() == 3);

  auto one = decide_free_embeddable(chain_lattice(1));
  CHECK(one.verdict == EmbedVerdict::embeddable);
}

TEST_CASE("random stacked lattices of the allowed shapes pass every gate") {
  std::mt19937 rng(20240817);
  auto pick_block = [&](int which, int k) -> FiniteLattice {
    if (which == 0) return chain_lattice(1);
    if (which == 1) return boolean_lattice(3);
    return product(chain_lattice(2), chain_lattice(k));
  };
  for (int trial = 0; trial < 500; ++trial) {
    int nblocks = 1 + int(rng() % 4);
    std::vector<FiniteLattice> blocks;
    std::vector<std::pair<BlockShape, int>> want;
    for (int i = 0; i < nblocks; ++i) {
      int which = int(rng() % 3);
      int k = 2 + int(rng() % 4);
      blocks.push_back(pick_block(which, k));
      if (which == 0)
        want.push_back({BlockShape::singleton, 0});
      else if (which == 1)
        want.push_back({BlockShape::cube, 0});
      else
        want.push_back({BlockShape::two_by_chain, k});
    }
    auto l = linear_sum(blocks);
    CHECK(whitman(l));
    CHECK(doubly_reducible(l).none());
    auto rep = decide_free_embeddable(l);
    CHECK(rep.verdict == EmbedVerdict::embeddable);
    REQUIRE(rep.decomposition.has_value());
    auto& got = rep.decomposition->blocks;
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      CHECK(got[i].shape == want[i].first);
      if (want[i].first == BlockShape::two_by_chain)
        CHECK(got[i].chain_length == want[i].second);
    }
  }
}
