// Exercises the shared-library surface through latkit.h alone; no C++ headers
// from the library are included on purpose.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "latkit.h"

namespace {

struct handle {
  latkit_lattice* l;
  explicit handle(latkit_lattice* l) : l(l) {}
  ~handle() { latkit_lattice_free(l); }
  handle(const handle&) = delete;
  handle& operator=(const handle&) = delete;
  operator latkit_lattice*() const { return l; }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  latkit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("constructions, queries and round trips through the C surface") {
  handle b3(latkit_parse_construction("boolean(3)"));
  REQUIRE(b3.l != nullptr);
  CHECK(latkit_last_status() == LATKIT_OK);
  CHECK(latkit_size(b3) == 8);

  int bottom = latkit_element_index(b3, "0");
  int a1 = latkit_element_index(b3, "a1");
  int a2 = latkit_element_index(b3, "a2");
  REQUIRE(bottom >= 0);
  REQUIRE(a1 >= 0);
  REQUIRE(a2 >= 0);
  CHECK(latkit_leq(b3, bottom, a1) == 1);
  CHECK(latkit_leq(b3, a1, a2) == 0);
  CHECK(latkit_meet(b3, a1, a2) == bottom);
  CHECK(std::string(latkit_element_name(b3, latkit_join(b3, a1, a2))) == "a1va2");

  std::string doc = take(latkit_document_dump(b3));
  handle back(latkit_document_parse(doc.c_str()));
  REQUIRE(back.l != nullptr);
  CHECK(latkit_size(back) == 8);
  CHECK(take(latkit_document_dump(back)) == doc);
}

TEST_CASE("transforms build new handles") {
  handle square(latkit_parse_construction("boolean(2)"));
  REQUIRE(square.l != nullptr);

  int region[] = {latkit_element_index(square, "a1")};
  handle doubled(latkit_double_region(square, region, 1, 1));
  REQUIRE(doubled.l != nullptr);
  CHECK(latkit_size(doubled) == 5);

  int collapse[] = {latkit_element_index(square, "a1"),
                    latkit_element_index(square, "a1va2")};
  handle quot(latkit_quotient_collapse(square, collapse, 1));
  REQUIRE(quot.l != nullptr);
  CHECK(latkit_size(quot) == 2);

  handle same(latkit_quotient_collapse(square, nullptr, 0));
  REQUIRE(same.l != nullptr);
  CHECK(latkit_size(same) == 4);
}

TEST_CASE("reports arrive as JSON text") {
  handle n5(latkit_parse_construction("n5"));
  REQUIRE(n5.l != nullptr);

  std::string analysis = take(latkit_analyze(n5));
  CHECK(analysis.find("\"size\": 5") != std::string::npos);
  CHECK(analysis.find("\"distributive\": false") != std::string::npos);

  std::string verdict = take(latkit_decide(n5));
  CHECK(verdict.find("\"out_of_scope\"") != std::string::npos);

  std::string gadgets = take(latkit_gadgets(n5));
  CHECK(gadgets.find("\"total\": 1") != std::string::npos);

  std::string dot = take(latkit_dot(n5));
  CHECK(dot.rfind("digraph lattice {", 0) == 0);

  std::string ex = take(latkit_explore(
      "{\"kind\":\"distributive\",\"depth\":3,\"probes\":[\"chain(2)\"]}"));
  CHECK(ex.find("\"class_count\": 18") != std::string::npos);

  std::string span = take(latkit_spanning_check(nullptr, "{\"implicit\":true,\"prefix\":4}"));
  CHECK(span.find("\"verified\"") != std::string::npos);

  handle c4(latkit_parse_construction("chain(4)"));
  std::string fin = take(latkit_spanning_check(
      c4, "{\"witness\":{\"p\":\"0\",\"q\":\"1\"},\"prefix\":0}"));
  CHECK(fin.find("\"refuted\"") != std::string::npos);
}

TEST_CASE("failures surface as status, message and witness") {
  CHECK(latkit_parse_construction("chain(") == nullptr);
  CHECK(latkit_last_status() == LATKIT_E_PARSE_ERROR);
  CHECK(std::string(latkit_last_message()).find("position 6") != std::string::npos);
  int witness[4] = {-1, -1, -1, -1};
  CHECK(latkit_last_witness(witness, 4) == 1);
  CHECK(witness[0] == 6);

  CHECK(latkit_document_parse("{}") == nullptr);
  CHECK(latkit_last_status() == LATKIT_E_BAD_DOCUMENT);

  CHECK(latkit_document_parse(
            "{\"format_version\":\"1\",\"elements\":[\"a\",\"b\"],\"covers\":[]}") ==
        nullptr);
  CHECK(latkit_last_status() == LATKIT_E_NOT_A_LATTICE);
  CHECK(std::string(latkit_status_name(latkit_last_status())) == "NotALattice");

  handle c2(latkit_parse_construction("chain(2)"));
  REQUIRE(c2.l != nullptr);
  CHECK(latkit_element_index(c2, "zz") == -1);
  CHECK(latkit_last_status() == LATKIT_E_UNKNOWN_ELEMENT);
  CHECK(latkit_element_name(c2, 99) == nullptr);
  CHECK(latkit_last_status() == LATKIT_E_UNKNOWN_ELEMENT);
  CHECK(latkit_leq(c2, 0, 99) == -1);

  // success clears the sticky state
  CHECK(latkit_leq(c2, 0, 1) == 1);
  CHECK(latkit_last_status() == LATKIT_OK);
  CHECK(std::string(latkit_last_message()).empty());
  CHECK(latkit_last_witness(witness, 4) == 0);

  CHECK(latkit_size(nullptr) == -1);
  CHECK(latkit_last_status() == LATKIT_E_INTERNAL);

  CHECK(latkit_parse_construction("double(chain(3), region=[0, 2])") == nullptr);
  CHECK(latkit_last_status() == LATKIT_E_NOT_CONVEX);

  CHECK(latkit_explore("{\"kind\":\"distributive\",\"probes\":[\"n5\"]}") == nullptr);
  CHECK(latkit_last_status() == LATKIT_E_PROBE_OUTSIDE_VARIETY);

  CHECK(latkit_status_name(LATKIT_OK) == std::string("OK"));
  CHECK(latkit_status_name(LATKIT_E_INTERNAL) == std::string("Internal"));
}
