#include "latkit/terms.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latkit/constructors.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/predicates.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("term building and formatting") {
  auto x = term_var("x"), y = term_var("y"), z = term_var("z");
  CHECK(format_term(x) == "x");
  CHECK(format_term(term_join(x, y)) == "x v y");
  CHECK(format_term(term_meet(x, y)) == "x^y");
  CHECK(format_term(term_join(term_join(x, y), z)) == "x v y v z");
  CHECK(format_term(term_meet(term_meet(x, y), z)) == "x^y^z");
  CHECK(format_term(term_meet(x, term_join(y, z))) == "x^(y v z)");
  CHECK(format_term(term_join(term_meet(x, y), term_meet(x, z))) == "(x^y) v (x^z)");
  CHECK(term_size(x) == 1);
  CHECK(term_size(term_meet(x, term_join(y, z))) == 5);
  CHECK(term_variables(term_meet(z, term_join(y, z))) == std::vector<std::string>{"y", "z"});
}

TEST_CASE("term parsing") {
  CHECK(format_term(parse_term("x^(y v z)")) == "x^(y v z)");
  CHECK(format_term(parse_term("  x ^ ( y v z )  ")) == "x^(y v z)");
  CHECK(format_term(parse_term("x v y v z")) == "x v y v z");
  CHECK(format_term(parse_term("(x v y) v z")) == "x v y v z");
  CHECK(format_term(parse_term("x1^x2")) == "x1^x2");
  CHECK(format_term(parse_term("((x))")) == "x");

  for (auto bad : {"x^y v z", "x v y^z", "((x)", "x)", "", "v", "x v v", "x y", "x^", "x&y"})
    CHECK_THROWS_AS(parse_term(bad), Error);
  try {
    parse_term("x v y^z");
  } catch (const Error& e) {
    CHECK(e.code == Err::ParseError);
  }

  auto id = parse_identity("x^(y v z) = x^(y v (x^z))");
  CHECK(id.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(format_term(id.left) == "x^(y v z)");
  CHECK(format_term(id.right) == "x^(y v (x^z))");
  CHECK_THROWS_AS(parse_identity("x v y"), Error);
  CHECK_THROWS_AS(parse_identity("x = y = z"), Error);
}

TEST_CASE("evaluation") {
  auto m3 = fixture("m3");
  std::map<std::string, int> atoms = {{"x", 1}, {"y", 2}, {"z", 3}};
  CHECK(evaluate(term_var("x"), m3, atoms) == 1);
  // y v z is the top, so x^(y v z) gives back the atom x
  CHECK(evaluate(parse_term("x^(y v z)"), m3, atoms) == 1);
  CHECK(evaluate(parse_term("(x^y) v (x^z)"), m3, atoms) == m3.bottom());

  auto fd = free_distributive(3);
  std::map<std::string, int> gens = {
      {"a", fd.index_of("a")}, {"b", fd.index_of("b")}, {"c", fd.index_of("c")}};
  int z1 = evaluate(parse_term("(a^b) v (b^c) v (c^a)"), fd, gens);
  int z2 = evaluate(parse_term("(a v b)^(b v c)^(c v a)"), fd, gens);
  CHECK(z1 == z2);
  CHECK(fd.name(z1) == "(a^b) v (a^c) v (b^c)");

  CHECK_THROWS_AS(evaluate(parse_term("x^w"), m3, atoms), Error);
  try {
    evaluate(parse_term("x^w"), m3, atoms);
  } catch (const Error& e) {
    CHECK(e.code == Err::UnboundVariable);
  }
  CHECK_THROWS_AS(evaluate(term_var("x"), m3, {{"x", 99}}), Error);

  // evaluation respects the operations node-wise
  auto n5 = testutil::pentagon();
  std::vector<Term> pool = {term_var("x"), term_var("y"), parse_term("x^y"),
                            parse_term("x v (y^z)"), parse_term("z")};
  for (int xx = 0; xx < 5; ++xx)
    for (int yy = 0; yy < 5; ++yy)
      for (int zz = 0; zz < 5; ++zz) {
        std::map<std::string, int> a = {{"x", xx}, {"y", yy}, {"z", zz}};
        for (auto& s : pool)
          for (auto& t : pool) {
            CHECK(evaluate(term_join(s, t), n5, a) ==
                  n5.join(evaluate(s, n5, a), evaluate(t, n5, a)));
            CHECK(evaluate(term_meet(s, t), n5, a) ==
                  n5.meet(evaluate(s, n5, a), evaluate(t, n5, a)));
          }
      }
}

TEST_CASE("identity checking") {
  auto fd = free_distributive(3);
  auto dist = parse_identity("x^(y v z) = (x^y) v (x^z)");
  CHECK(check_identity(fd, dist).holds);

  auto n5 = fixture("n5");
  auto modular = parse_identity("(x^z) v (y^z) = ((x^z) v y)^z");
  auto res = check_identity(n5, modular);
  CHECK(!res.holds);
  REQUIRE(res.witness.size() == 3);
  // witness is genuine and lexicographically least
  CHECK(evaluate(modular.left, n5, res.witness) != evaluate(modular.right, n5, res.witness));
  bool found_least = false;
  for (int x = 0; x < 5 && !found_least; ++x)
    for (int y = 0; y < 5 && !found_least; ++y)
      for (int z = 0; z < 5 && !found_least; ++z) {
        std::map<std::string, int> a = {{"x", x}, {"y", y}, {"z", z}};
        if (evaluate(modular.left, n5, a) != evaluate(modular.right, n5, a)) {
          CHECK(res.witness == a);
          found_least = true;
        }
      }
  CHECK(found_least);

  // idempotency holds everywhere
  auto idem = parse_identity("x v x = x");
  for (auto l : {fixture("m3"), fixture("n5"), chain_lattice(4)})
    CHECK(check_identity(l, idem).holds);

  auto five = make_identity(
      term_join(term_join(term_join(term_join(term_var("a"), term_var("b")), term_var("c")),
                          term_var("d")),
                term_var("e")),
      term_var("a"));
  CHECK_THROWS_AS(check_identity(fd, five), Error);
}

TEST_CASE("semidistributivity identities by level") {
  auto sd0 = sd_identity(0, SdPolarity::meet);
  CHECK(format_term(sd0.left) == "x^(y v z)");
  CHECK(format_term(sd0.right) == "x^y");
  CHECK(format_term(sd_identity(1, SdPolarity::meet).right) == "x^(y v (x^z))");
  CHECK(format_term(sd_identity(2, SdPolarity::meet).right) == "x^(y v (x^(z v (x^y))))");
  CHECK(format_term(sd_identity(2, SdPolarity::join).right) == "x v (y^(x v (z^(x v y))))");
  // the unrolled right side grows linearly with the level
  for (int n = 0; n <= 6; ++n) {
    CHECK(term_size(sd_identity(n, SdPolarity::meet).right) == 4 * n + 3);
    CHECK(term_size(sd_identity(n, SdPolarity::join).right) == 4 * n + 3);
  }
  CHECK_THROWS_AS(sd_identity(-1, SdPolarity::meet), Error);
}

TEST_CASE("sd level agrees with the direct-evaluation oracle") {
  for (int n = 1; n <= 6; ++n)
    for (auto& l : enumerate_lattices(n))
      for (int k = 0; k <= 3; ++k) {
        CHECK(check_identity(l, sd_identity(k, SdPolarity::meet)).holds ==
              oracle::sd_meet_holds(l, k));
        CHECK(check_identity(l, sd_identity(k, SdPolarity::join)).holds ==
              oracle::sd_join_holds(l, k));
      }
}

TEST_CASE("sd levels of landmark lattices") {
  CHECK(sd_level(chain_lattice(1)) == 0);
  CHECK(sd_level(chain_lattice(4)) == 1);
  CHECK(sd_level(boolean_lattice(3)) == 1);
  CHECK(sd_level(fixture("n5")) == 2);
  CHECK(!sd_level(fixture("m3"), 6));
  for (auto& l : enumerate_distributive_lattices(8))
    CHECK(sd_level(l) == (l.size() == 1 ? 0 : 1));
}

TEST_CASE("level n implies level n+1 on the small corpus") {
  for (int sz = 1; sz <= 6; ++sz)
    for (auto& l : enumerate_lattices(sz))
      for (int n = 0; n <= 3; ++n)
        for (auto pol : {SdPolarity::meet, SdPolarity::join}) {
          if (check_identity(l, sd_identity(n, pol)).holds)
            CHECK(check_identity(l, sd_identity(n + 1, pol)).holds);
        }
  // and holding at some level forces plain semidistributivity
  for (int sz = 1; sz <= 6; ++sz)
    for (auto& l : enumerate_lattices(sz)) {
      if (sd_level(l, 4)) {
        CHECK(is_semidistributive_meet(l));
        CHECK(is_semidistributive_join(l));
      }
    }
}

TEST_CASE("exploring the free distributive lattice via a two-chain probe") {
  VarietySpec dist{VarietySpec::Kind::distributive, 0};
  auto r0 = explore_relatively_free(dist, 3, 0, {chain_lattice(2)});
  CHECK(r0.class_count == 3);

  auto r = explore_relatively_free(dist, 3, 3, {chain_lattice(2)});
  CHECK(r.class_count == 18);
  CHECK(r.counts_by_depth == std::vector<int>{3, 9, 17, 18});
  CHECK(int(r.representatives.size()) == 18);

  // saturation: once every monotone function is hit nothing new appears
  auto r4 = explore_relatively_free(dist, 3, 4, {chain_lattice(2)});
  CHECK(r4.counts_by_depth == std::vector<int>{3, 9, 17, 18, 18});

  // representatives really are pairwise separated by the probe
  std::set<std::vector<int>> vectors;
  auto c2 = chain_lattice(2);
  for (auto& t : r.representatives) {
    std::vector<int> vec;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          vec.push_back(evaluate(t, c2, {{"x1", x}, {"x2", y}, {"x3", z}}));
    vectors.insert(vec);
  }
  CHECK(vectors.size() == 18);
}

TEST_CASE("exploring the level-two join-semidistributive variety") {
  auto id2 = sd_identity(2, SdPolarity::join);
  std::vector<FiniteLattice> probes;
  for (int n = 1; n <= 6; ++n)
    for (auto& l : enumerate_lattices(n))
      if (check_identity(l, id2).holds) probes.push_back(l);
  CHECK(probes.size() == 18);

  VarietySpec sd2{VarietySpec::Kind::sd_join, 2};
  auto r = explore_relatively_free(sd2, 3, 4, probes);
  CHECK(r.counts_by_depth == std::vector<int>{3, 9, 23, 49, 97});
  CHECK(r.class_count == 97);

  // monotone in the probe set
  std::vector<FiniteLattice> fewer(probes.begin(), probes.begin() + 5);
  auto rf = explore_relatively_free(sd2, 3, 3, fewer);
  CHECK(rf.class_count <= 49);

  // determinism
  auto again = explore_relatively_free(sd2, 3, 4, probes);
  CHECK(again.counts_by_depth == r.counts_by_depth);
  for (size_t i = 0; i < r.representatives.size(); ++i)
    CHECK(format_term(again.representatives[i]) == format_term(r.representatives[i]));
}

TEST_CASE("explore rejects bad inputs") {
  VarietySpec dist{VarietySpec::Kind::distributive, 0};
  try {
    explore_relatively_free(dist, 3, 2, {fixture("m3")});
    FAIL("m3 is not distributive");
  } catch (const Error& e) {
    CHECK(e.code == Err::ProbeOutsideVariety);
    CHECK(e.witness == std::vector<int>{0});
  }
  CHECK_THROWS_AS(explore_relatively_free(dist, 3, 2, {fixture("n5")}), Error);

  // n5 does satisfy both level-2 identities
  VarietySpec both{VarietySpec::Kind::sd_both, 2};
  auto r = explore_relatively_free(both, 3, 2, {fixture("n5")});
  CHECK(r.class_count > 3);

  CHECK_THROWS_AS(explore_relatively_free(dist, 5, 2, {chain_lattice(2)}), Error);
  CHECK_THROWS_AS(explore_relatively_free(dist, 0, 2, {chain_lattice(2)}), Error);
  CHECK_THROWS_AS(explore_relatively_free(dist, 3, -1, {chain_lattice(2)}), Error);
  CHECK_THROWS_AS(explore_relatively_free(dist, 3, 2, {}), Error);
}
