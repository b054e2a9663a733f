#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cxs;
using namespace cxs::test;

TEST_CASE("round trip is the identity on the corpus") {
  int n = 0;
  for (const auto& sc : corpus()) {
    Json once = write_scenario(sc);
    Scenario back = read_scenario(once);
    Json twice = write_scenario(back);
    INFO(sc.name);
    REQUIRE(once == twice);
    ++n;
  }
  REQUIRE(n >= 10);
}

TEST_CASE("geometry blocks rebuild the exact context") {
  Scenario sc = load("triple_product_g2.scn");
  const GeometryContext& ctx = *sc.geometry;
  GeometryContext again = read_geometry(write_geometry(ctx));
  REQUIRE(again.ns_basis == ctx.ns_basis);
  REQUIRE(again.xi == ctx.xi);
  REQUIRE(again.pic0_gens == ctx.pic0_gens);
  REQUIRE(again.nt_gram == ctx.nt_gram);
  REQUIRE(again.h1s_zero == ctx.h1s_zero);
  REQUIRE(again.f().image_class == ctx.f().image_class);
  REQUIRE(again.opaque.at("mu_f").lower.at("xk") == ctx.opaque.at("mu_f").lower.at("xk"));
  // Behavioral equality on a nontrivial computation.
  REQUIRE(arithmetic_diagonal(again) == arithmetic_diagonal(ctx));
}

TEST_CASE("values serialize as exact fraction strings") {
  Scenario sc = load("p1xp1_a2b3.scn");
  Json j = write_scenario(sc);
  REQUIRE(j["geometry"]["surface"]["xi"]["H1"] == "1/6");
  REQUIRE(j["geometry"]["surface"]["xi"]["H2"] == "1/4");
  REQUIRE(j["geometry"]["graph_expansion"][2]["coeff"] == "-1/12");
}

TEST_CASE("malformed inputs raise validation errors") {
  REQUIRE_THROWS_AS(load_scenario(scenario_path("missing.scn")), Error);
  Json j = Json::parse(R"({"geometry": {"surface": {"ns_basis": ["H"],
      "ns_gram": [["1"]], "xi": {"H": "0.5"}}}})");
  REQUIRE_THROWS_AS(read_scenario(j), Error);
  Json neg = Json::parse(R"({"geometry": {"surface": {"ns_basis": ["H"],
      "ns_gram": [["-1"]], "xi": {"H": "1"}}}})");
  try {
    read_scenario(neg);
    FAIL("expected an ampleness refusal");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::Validation);
  }
}

TEST_CASE("symbolic pairing entries survive the round trip") {
  Scenario sc = load("ff_generic.scn");
  Json j = write_scenario(sc);
  Scenario back = read_scenario(j);
  REQUIRE(back.heights->w2 == LinPoly::symbol("w2"));
  REQUIRE(back.heights->fs == 1);
  LinPoly mixed = LinPoly::symbol("h", Rat(2)) + LinPoly(Rat(1) / 3);
  REQUIRE(read_lin(write_lin(mixed)) == mixed);
}
