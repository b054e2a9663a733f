#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cxs;
using namespace cxs::test;

TEST_CASE("closed form equals the expansion route on random rational data") {
  Rng rng(808);
  int checked = 0;
  while (checked < 220) {
    ArithSurfaceData t;
    t.genus = rng.integer(2, 6);
    t.w2 = LinPoly(rng.rat());
    t.ws = LinPoly(rng.rat());
    t.ss = LinPoly(rng.rat());
    t.fs = rng.rat();
    if (t.d() == 0) continue;
    HeightResult r = height_unramified(t);
    REQUIRE(r.closed_form == r.proof_route);
    ++checked;
  }
}

TEST_CASE("two routes agree on fully symbolic data") {
  ArithSurfaceData t;
  t.genus = 3;
  t.w2 = LinPoly::symbol("w2");
  t.ws = LinPoly::symbol("ws");
  t.ss = LinPoly::symbol("ss");
  t.fs = 1;
  HeightResult r = height_unramified(t);
  REQUIRE(r.closed_form == r.proof_route);
  REQUIRE(r.closed_form.coeff("w2") == Rat(-4) / 3);
  REQUIRE(r.closed_form.coeff("ws") == Rat(5) / 3);
  REQUIRE(r.closed_form.coeff("ss") == Rat(-1) / 3);
}

TEST_CASE("normalized section class has the defining properties") {
  Rng rng(909);
  for (int i = 0; i < 50; ++i) {
    ArithSurfaceData t;
    t.genus = rng.integer(2, 8);
    t.w2 = LinPoly(rng.rat());
    t.ws = LinPoly(rng.rat());
    t.ss = LinPoly(rng.rat());
    t.fs = rng.rat();
    if (t.d() == 0) continue;
    LatticeClass e = ebar(t);
    REQUIRE(lattice_pair(e, e, t).is_zero());
    REQUIRE(lattice_pair(e, LatticeClass::F(), t) == LinPoly(1));
  }
  ArithSurfaceData t;
  t.genus = 2;
  t.w2 = LinPoly(1);
  t.ws = LinPoly(0);
  t.ss = LinPoly(0);
  t.fs = 0;
  // A class violating the section normalization is refused.
  REQUIRE_THROWS_AS(push_delta_sq(t, LatticeClass::w()), Error);
}

TEST_CASE("K3 pencil heights carry the expected symbolic coefficients") {
  for (long g = 2; g <= 10; ++g) {
    ArithSurfaceData t = k3_data(g, LinPoly::symbol("h"));
    HeightResult r = height_unramified(t);
    REQUIRE(r.closed_form == r.proof_route);
    REQUIRE(r.closed_form.coeff("w2") == -Rat(2 * g - 1) / Rat(2 * g - 2));
    REQUIRE(r.closed_form.coeff("h") == Rat(2 * g));
    REQUIRE(r.closed_form.constant() == 0);
  }
}

TEST_CASE("K3 positivity bound has the exact closed form") {
  for (long g = 2; g <= 10; ++g) {
    Rat h = Rat(3) / 7;
    REQUIRE(k3_bound(g, h) == Rat(4 * g * (g - 1)) * h / Rat(2 * g - 1));
  }
  REQUIRE(k3_bound(2, Rat(1)) == Rat(8) / 3);
  REQUIRE_THROWS_AS(k3_bound(1, Rat(1)), Error);
}

TEST_CASE("scenario-driven K3 evaluation matches the hand value") {
  Scenario sc = load("k3_g2.scn");
  REQUIRE(sc.heights.has_value());
  HeightResult r = height_unramified(*sc.heights);
  REQUIRE(r.closed_form == LinPoly(Rat(5) / 2));
  REQUIRE(r.proof_route == LinPoly(Rat(5) / 2));
}

TEST_CASE("vanishing horizontal degree is refused with the hypothesis named") {
  Scenario sc = load("ff_d0.scn");
  try {
    height_unramified(*sc.heights);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::Domain);
    REQUIRE(std::string(e.what()).find("d != 0") != std::string::npos);
  }
}

TEST_CASE("triple-product height formula and its vanishing cases") {
  GrossSchoenResult r = gross_schoen_height(3, Rat(2), Rat(1) / 3, Rat(1) / 5);
  REQUIRE(r.value == Rat(8) * 2 / 4 + Rat(1) / 3 + Rat(1) / 5);
  REQUIRE(r.note.empty());

  for (long g : {0L, 1L}) {
    GrossSchoenResult z = gross_schoen_height(g, Rat(5), Rat(1), Rat(1));
    REQUIRE(z.value == 0);
    REQUIRE_FALSE(z.note.empty());
  }
  GrossSchoenResult hyper = gross_schoen_height(4, Rat(5), Rat(1), Rat(1), true);
  REQUIRE(hyper.value == 0);
  REQUIRE_FALSE(hyper.note.empty());

  Scenario sc = load("triple_product_g2.scn");
  REQUIRE(sc.gross_schoen.has_value());
  GrossSchoenResult v = gross_schoen_height(sc.gross_schoen->genus, sc.gross_schoen->w2,
                                            sc.gross_schoen->nt_xe, sc.gross_schoen->local_terms,
                                            sc.gross_schoen->hyperelliptic);
  REQUIRE(v.value == Rat(3) * 3 + Rat(1) / 2 + Rat(1) / 4);
}
