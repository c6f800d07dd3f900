#include "latkit/doubling.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latkit/congruence.hpp"
#include "latkit/constructors.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/iso.hpp"
#include "latkit/predicates.hpp"
#include "oracles.hpp"

using namespace latkit;

namespace {

std::vector<FiniteLattice> small_corpus(int max_size) {
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_size; ++n)
    for (auto& l : enumerate_lattices(n)) out.push_back(l);
  return out;
}

Bitset full_set(int n) {
  Bitset b(n);
  for (int i = 0; i < n; ++i) b.set(i);
  return b;
}

// convexity straight from the definition, no up/down set tricks
bool convex_by_scan(const FiniteLattice& l, const Bitset& s) {
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      for (int r = 0; r < l.size(); ++r)
        if (s.test(x) && s.test(y) && !s.test(r) && l.leq(x, r) && l.leq(r, y)) return false;
  return true;
}

void check_double_invariants(const FiniteLattice& base, const Bitset& region,
                             const DoubleResult& d) {
  CHECK(d.lattice.size() == base.size() + region.count());
  for (int u = 0; u < base.size(); ++u) {
    if (region.test(u)) {
      CHECK(d.lattice.lt(d.lower_image[u], d.upper_image[u]));
      CHECK(d.lattice.name(d.lower_image[u]) == "(" + base.name(u) + ",0)");
      CHECK(d.lattice.name(d.upper_image[u]) == "(" + base.name(u) + ",1)");
    } else {
      CHECK(d.lower_image[u] == d.upper_image[u]);
      CHECK(d.lattice.name(d.lower_image[u]) == base.name(u));
    }
    CHECK(d.projection[d.lower_image[u]] == u);
    CHECK(d.projection[d.upper_image[u]] == u);
  }
  // kernel() re-verifies that the projection is a homomorphism and its
  // fibers are exactly the copy pairs
  Congruence fibers = kernel(d.lattice, base, d.projection);
  CHECK(fibers.class_count() == base.size());
}

}  // namespace

TEST_CASE("convexity witnesses match the defining triple scan") {
  auto c3 = chain_lattice(3);
  auto w = convexity_witness(c3, testutil::set_of(3, {0, 2}));
  REQUIRE(w.has_value());
  CHECK(*w == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(is_convex(c3, testutil::set_of(3, {0, 2})));

  auto b3 = boolean_lattice(3);
  CHECK(is_convex(b3, testutil::set_of(8, {1, 2, 4})));  // atoms form an antichain

  for (auto& l : small_corpus(5)) {
    int n = l.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Bitset s(n);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.set(i);
      auto wit = convexity_witness(l, s);
      CHECK(!wit.has_value() == convex_by_scan(l, s));
      if (wit) {
        auto [x, r, y] = *wit;
        CHECK(s.test(x));
        CHECK(s.test(y));
        CHECK_FALSE(s.test(r));
        CHECK(l.leq(x, r));
        CHECK(l.leq(r, y));
      }
    }
    // every interval is convex
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (l.leq(p, q)) CHECK(is_convex(l, l.up_set(p) & l.down_set(q)));
  }
}

TEST_CASE("doubling textbook regions reproduces the textbook lattices") {
  auto d1 = day_double(chain_lattice(1), {full_set(1), true});
  CHECK(d1.lattice.size() == 2);
  CHECK(is_isomorphic(d1.lattice, chain_lattice(2)).has_value());

  auto d2 = day_double(chain_lattice(2), {full_set(2), true});
  CHECK(is_isomorphic(d2.lattice, boolean_lattice(2)).has_value());

  auto d3 = day_double(chain_lattice(3), {testutil::set_of(3, {1}), true});
  CHECK(is_isomorphic(d3.lattice, chain_lattice(4)).has_value());

  auto b2 = boolean_lattice(2);
  auto d4 = day_double(b2, {testutil::set_of(4, {1}), true});
  CHECK(is_isomorphic(d4.lattice, fixture("n5")).has_value());

  // doubling the whole lattice is the product with a two-chain
  auto d5 = day_double(fixture("m3"), {full_set(5), true});
  CHECK(is_isomorphic(d5.lattice, product(chain_lattice(2), fixture("m3"))).has_value());

  // empty region copies the base unchanged
  auto d6 = day_double(b2, {Bitset(4), false});
  CHECK(canonical_key(d6.lattice) == canonical_key(b2));
  CHECK(d6.lattice.names() == b2.names());
}

TEST_CASE("copy order, image maps and the erasing projection") {
  auto c5 = chain_lattice(5);
  Bitset mid = testutil::set_of(5, {1, 2, 3});
  auto d = day_double(c5, {mid, true});
  check_double_invariants(c5, mid, d);

  // order clause spot checks: copies compare componentwise, everything else
  // inherits the base order
  auto& dl = d.lattice;
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) {
      if (mid.test(u) && mid.test(v)) {
        CHECK(dl.leq(d.lower_image[u], d.lower_image[v]) == c5.leq(u, v));
        CHECK(dl.leq(d.upper_image[u], d.upper_image[v]) == c5.leq(u, v));
        CHECK(dl.leq(d.lower_image[u], d.upper_image[v]) == c5.leq(u, v));
        CHECK(dl.leq(d.upper_image[u], d.lower_image[v]) == false);
      }
      if (!mid.test(u) && mid.test(v)) {
        CHECK(dl.leq(d.lower_image[u], d.lower_image[v]) == c5.leq(u, v));
        CHECK(dl.leq(d.lower_image[u], d.upper_image[v]) == c5.leq(u, v));
        CHECK(dl.leq(d.lower_image[v], d.lower_image[u]) == c5.leq(v, u));
        CHECK(dl.leq(d.upper_image[v], d.lower_image[u]) == c5.leq(v, u));
      }
    }

  auto b2 = boolean_lattice(2);
  auto pent = day_double(b2, {testutil::set_of(4, {1}), true});
  check_double_invariants(b2, testutil::set_of(4, {1}), pent);
  // the copies of the doubled atom stay incomparable to the other atom
  CHECK(pent.lattice.incomparable(pent.lower_image[1], pent.lower_image[2]));
  CHECK(pent.lattice.incomparable(pent.upper_image[1], pent.lower_image[2]));

  auto b3 = boolean_lattice(3);
  auto cube2 = day_double(b3, {full_set(8), true});
  check_double_invariants(b3, full_set(8), cube2);
  CHECK(is_isomorphic(cube2.lattice, boolean_lattice(4)).has_value());
}

TEST_CASE("every interval double of every small lattice validates") {
  for (auto& l : small_corpus(6)) {
    int n = l.size();
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!l.leq(p, q)) continue;
        Bitset region = l.up_set(p) & l.down_set(q);
        auto d = day_double(l, {region, true});
        CHECK(d.lattice.size() == n + region.count());
        for (int u = region.first(); u >= 0; u = region.next(u))
          CHECK(d.lattice.lt(d.lower_image[u], d.upper_image[u]));
      }
  }
}

TEST_CASE("doubles of arbitrary convex regions validated as lattices") {
  int not_a_lattice = 0;
  for (auto& l : small_corpus(5)) {
    int n = l.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Bitset s(n);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.set(i);
      if (!is_convex(l, s)) continue;
      try {
        auto d = day_double(l, {s, false});
        check_double_invariants(l, s, d);
      } catch (const Error& e) {
        CHECK(e.code == Err::NotALattice);
        ++not_a_lattice;
      }
    }
  }
  // observed: the convex-region double always validated on this corpus
  CHECK(not_a_lattice == 0);
}

TEST_CASE("doubling error paths") {
  auto c3 = chain_lattice(3);
  try {
    day_double(c3, {testutil::set_of(3, {0, 2}), false});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NotConvex);
    CHECK(e.witness == std::vector<int>{0, 1, 2});
  }

  auto b2 = boolean_lattice(2);
  try {
    day_double(b2, {testutil::set_of(4, {1, 2}), true});  // atoms: convex but not an interval
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NotAnInterval);
    CHECK(e.witness == std::vector<int>{0, 3});
  }
  CHECK_THROWS_AS(day_double(b2, {Bitset(4), true}), Error);
  CHECK_THROWS_AS(day_double(chain_lattice(4), {Bitset(3), false}), Error);
}

TEST_CASE("whitman guard and its necessity for the doubled lattice") {
  auto b3 = boolean_lattice(3);
  for (int u = 0; u < 8; ++u) CHECK(whitman_doubling_guard(b3, testutil::set_of(8, {u})));

  auto wit = whitman_doubling_guard_witness(b3, full_set(8));
  REQUIRE(wit.has_value());
  CHECK(*wit == 1);  // first atom: join irreducible but meet reducible
  CHECK_FALSE(whitman(day_double(b3, {full_set(8), true}).lattice));

  auto c5 = chain_lattice(5);
  Bitset mid = testutil::set_of(5, {1, 2, 3});
  CHECK(whitman_doubling_guard(c5, mid));
  CHECK(whitman(day_double(c5, {mid, true}).lattice));

  CHECK_THROWS_AS(whitman_doubling_guard(chain_lattice(3), testutil::set_of(3, {0, 2})), Error);

  // guard failure forces a Whitman failure in the double, across all convex
  // regions of all small lattices
  for (auto& l : small_corpus(6)) {
    int n = l.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Bitset s(n);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.set(i);
      if (!is_convex(l, s)) continue;
      if (whitman_doubling_guard(l, s)) continue;
      CHECK_FALSE(whitman(day_double(l, {s, false}).lattice));
    }
  }
}

TEST_CASE("join and meet dependency match the minimal cover oracle") {
  std::vector<FiniteLattice> corpus = small_corpus(6);
  corpus.push_back(fixture("m3"));
  corpus.push_back(fixture("n5"));
  corpus.push_back(fixture("fl_1_2"));
  corpus.push_back(free_distributive(3));
  for (auto& l : corpus) {
    auto jd = join_dependency(l);
    auto md = meet_dependency(l);
    auto brute = oracle::brute_join_dependency(l);
    auto brute_dual = oracle::brute_join_dependency(dual(l));
    for (int p = 0; p < l.size(); ++p) {
      std::set<int> got(jd[p].begin(), jd[p].end());
      std::set<int> want;
      for (int q = 0; q < l.size(); ++q)
        if (brute[p][q]) want.insert(q);
      CHECK(got == want);
      std::set<int> got_m(md[p].begin(), md[p].end());
      std::set<int> want_m;
      for (int q = 0; q < l.size(); ++q)
        if (brute_dual[p][q]) want_m.insert(q);
      CHECK(got_m == want_m);
    }
  }

  // the diamond's atoms depend on each other in a full cycle
  auto m3 = fixture("m3");
  auto jd = join_dependency(m3);
  for (int a : {1, 2, 3}) {
    std::set<int> got(jd[a].begin(), jd[a].end());
    std::set<int> want{1, 2, 3};
    want.erase(a);
    CHECK(got == want);
  }
}

TEST_CASE("boundedness verdicts and certificates") {
  auto m3 = fixture("m3");
  auto rep = boundedness_report(m3);
  CHECK_FALSE(rep.bounded);
  CHECK_FALSE(is_bounded(m3));
  REQUIRE(rep.join_cycle.size() >= 2);
  auto jd = join_dependency(m3);
  for (size_t i = 0; i < rep.join_cycle.size(); ++i) {
    int p = rep.join_cycle[i];
    int q = rep.join_cycle[(i + 1) % rep.join_cycle.size()];
    CHECK((p == 1 || p == 2 || p == 3));
    CHECK(std::count(jd[p].begin(), jd[p].end(), q) == 1);
  }
  CHECK(rep.meet_cycle.size() >= 2);
  CHECK(rep.join_order.empty());

  for (auto* name : {"n5", "fl_1_2"}) {
    auto l = fixture(name);
    auto r = boundedness_report(l);
    CHECK(r.bounded);
    CHECK(r.join_cycle.empty());
    auto arrows = join_dependency(l);
    CHECK(int(r.join_order.size()) == join_irreducibles(l).count());
    std::vector<int> pos(l.size(), -1);
    for (int i = 0; i < int(r.join_order.size()); ++i) pos[r.join_order[i]] = i;
    for (int p = 0; p < l.size(); ++p)
      for (int q : arrows[p]) CHECK(pos[q] < pos[p]);
    auto marrows = meet_dependency(l);
    std::vector<int> mpos(l.size(), -1);
    for (int i = 0; i < int(r.meet_order.size()); ++i) mpos[r.meet_order[i]] = i;
    for (int p = 0; p < l.size(); ++p)
      for (int q : marrows[p]) CHECK(mpos[q] < mpos[p]);
  }

  // frozen bounded counts per size, validated against the brute oracle
  const int want_bounded[8] = {0, 1, 1, 1, 2, 4, 9, 22};
  for (int n = 1; n <= 7; ++n) {
    int got = 0;
    for (auto& l : enumerate_lattices(n)) {
      bool b = is_bounded(l);
      CHECK(b == oracle::brute_is_bounded(l));
      got += b ? 1 : 0;
    }
    CHECK(got == want_bounded[n]);
  }

  for (auto& l : enumerate_distributive_lattices(8)) CHECK(is_bounded(l));
}

TEST_CASE("undouble search finds replayable doubling histories") {
  auto replay_ok = [](const FiniteLattice& target, const UndoubleSequence& seq) {
    REQUIRE(seq.stages.size() == seq.steps.size() + 1);
    CHECK(seq.stages.front().size() == 1);
    for (size_t i = 0; i < seq.steps.size(); ++i) {
      CHECK(seq.steps[i].interval);
      auto d = day_double(seq.stages[i], seq.steps[i]);
      CHECK(canonical_key(d.lattice) == canonical_key(seq.stages[i + 1]));
      CHECK(d.lattice.size() == seq.stages[i + 1].size());
    }
    CHECK(is_isomorphic(seq.stages.back(), target).has_value());
  };

  auto c6 = chain_lattice(6);
  auto seq = undouble_search(c6);
  REQUIRE(seq.has_value());
  CHECK(seq->steps.size() == 5);
  for (auto& st : seq->steps) CHECK(st.region.count() == 1);
  replay_ok(c6, *seq);

  auto n5 = fixture("n5");
  auto sn5 = undouble_search(n5);
  REQUIRE(sn5.has_value());
  replay_ok(n5, *sn5);
  std::vector<int> sizes;
  for (auto& s : sn5->stages) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{1, 2, 4, 5});  // passes through the 2x2 square

  auto b3 = boolean_lattice(3);
  auto sb3 = undouble_search(b3);
  REQUIRE(sb3.has_value());
  replay_ok(b3, *sb3);
  std::vector<int> bsizes;
  for (auto& s : sb3->stages) bsizes.push_back(s.size());
  CHECK(bsizes == std::vector<int>{1, 2, 4, 8});  // whole-lattice doublings

  CHECK_FALSE(undouble_search(fixture("m3")).has_value());

  auto one = undouble_search(chain_lattice(1));
  REQUIRE(one.has_value());
  CHECK(one->steps.empty());

  try {
    undouble_search(n5, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::BudgetExceeded);
  }
  CHECK_THROWS_AS(undouble_search(free_distributive(3)), Error);
}

TEST_CASE("undouble search agrees with boundedness on every small lattice") {
  for (int n = 1; n <= 7; ++n)
    for (auto& l : enumerate_lattices(n))
      CHECK(undouble_search(l).has_value() == is_bounded(l));
}
