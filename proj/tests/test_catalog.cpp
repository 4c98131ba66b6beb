#include <doctest.h>

#include "degenlab/catalog.hpp"
#include "degenlab/error.hpp"

#include <fstream>
#include <sstream>

using namespace degenlab;

namespace {

std::string standard_text() {
  std::ifstream in(std::string(DEGENLAB_CATALOG_DIR) + "/standard.json");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("module expressions parse to canonical form") {
  const auto m = ModuleExpr::parse("Rfree(-1) + L1(0)^2 + L1");
  CHECK(m.to_string() == "L1(0)^3 + Rfree(-1)");
  CHECK(m.total() == 4);
  CHECK(ModuleExpr::parse("0").empty());
  CHECK(ModuleExpr::parse("  Lplus ") == ModuleExpr(Vertex{"Lplus", 0}));
  CHECK(ModuleExpr::parse(m.to_string()) == m);
  CHECK(ModuleExpr::parse("A(2) + B").shifted(-1).to_string() == "A(1) + B(-1)");
  const auto order = ModuleExpr::parse_ordered("Rfree + M1(-1)");
  REQUIRE(order.size() == 2);
  CHECK(order[0] == Vertex{"Rfree", 0});
  CHECK(order[1] == Vertex{"M1", -1});
}

TEST_CASE("module expression errors carry positions") {
  for (const char* bad : {"", "L1(", "L1(x)", "L1^0", "L1 L2", "+L1", "L1(1", "(1)"}) {
    CHECK_THROWS_AS(ModuleExpr::parse(bad), Error);
  }
  try {
    ModuleExpr::parse("L1 + L2(3");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("position 9") != std::string::npos);
  }
}

TEST_CASE("multiset operations") {
  auto a = ModuleExpr::parse("X^2 + Y(1)");
  const auto b = ModuleExpr::parse("X + Z");
  CHECK(a.common(b) == ModuleExpr::parse("X"));
  CHECK_FALSE(a.contains(b));
  CHECK((a + b).to_string() == "X(0)^3 + Y(1) + Z(0)");
  CHECK_THROWS_AS(a - b, Error);
  CHECK((a - ModuleExpr::parse("X")).to_string() == "X(0) + Y(1)");
  CHECK(a.scaled(2).total() == 6);
}

TEST_CASE("standard catalog parses") {
  const auto text = standard_text();
  const Catalog cat = parse_catalog(text);
  CHECK(cat.rings.size() == 6);
  CHECK(cat.hash == content_hash(text));
  CHECK(cat.hash.size() == 16);
  const auto& tl = cat.ring("two-lines");
  CHECK(tl.ring->canonical_twist() == 0);
  CHECK(tl.primes.size() == 2);
  CHECK(tl.module("Lplus").presentation.is_certified_cm());
  CHECK(cat.ring("kx3").ring->canonical_twist() == 2);
  CHECK(cat.ring("cusp").ring->canonical_twist() == 1);
  CHECK_FALSE(cat.ring("kxy-x2").flags.isolated);
  CHECK_THROWS_AS(cat.ring("nope"), Error);
  CHECK_THROWS_AS(tl.check_ids(ModuleExpr::parse("Lplus + Bogus + Other(1)")), Error);
}

TEST_CASE("corrupted catalogs are rejected with a location") {
  auto text = standard_text();
  const auto pos = text.find("\"psi\": [[[[\"1/1\", [1]]]]]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 25, "\"psi\": [[[[\"2/1\", [1]]]]]");
  try {
    parse_catalog(text);
    FAIL("expected a data error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kData);
    CHECK(std::string(e.what()).find("kx2.modules.L1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_catalog("{\"schema\": \"other/2\", \"rings\": []}"), Error);
  CHECK_THROWS_AS(parse_catalog("not json"), Error);
}
