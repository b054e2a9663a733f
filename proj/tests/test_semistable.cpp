#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cxs;
using namespace cxs::test;

namespace {

LocalChart chart_of(std::vector<std::string> vars, std::vector<Relation> rels) {
  LocalChart c;
  c.vars = std::move(vars);
  c.rels = std::move(rels);
  return c;
}

Relation rel_pi(std::initializer_list<std::string> lhs) {
  return Relation{mon(lhs), {}, true};
}

Relation rel_eq(std::initializer_list<std::string> lhs, std::initializer_list<std::string> rhs) {
  return Relation{mon(lhs), mon(rhs), false};
}

}  // namespace

TEST_CASE("chart normalization and strictness predicates") {
  LocalChart std4 = chart_of({"a", "b", "c", "d"}, {rel_pi({"a", "b", "c", "d"})});
  REQUIRE(semistable_at_origin(std4));
  REQUIRE(semistable_everywhere(std4));

  LocalChart sq = chart_of({"a", "b"}, {rel_pi({"a", "a", "b"})});
  REQUIRE_FALSE(semistable_at_origin(sq));

  // Double point times double curve: the unresolved product model.
  LocalChart prod = local_models_at(CurvePoint::Node, SurfPoint::DoubleCurve);
  REQUIRE_FALSE(semistable_at_origin(prod));
  REQUIRE_FALSE(semistable_everywhere(prod));

  // Away from the deep point the same chart is already fine.
  LocalChart smooth = local_models_at(CurvePoint::Smooth, SurfPoint::TriplePoint);
  REQUIRE(semistable_everywhere(smooth));
  REQUIRE(semistable_everywhere(local_models_at(CurvePoint::Node, SurfPoint::Smooth)));
  REQUIRE(semistable_everywhere(local_models_at(CurvePoint::Smooth, SurfPoint::Smooth)));
}

TEST_CASE("chart isomorphism is renaming invariance, nothing more") {
  LocalChart a = chart_of({"x", "y", "z"}, {rel_pi({"x", "y", "z"})});
  LocalChart b = chart_of({"p", "q", "r"}, {rel_pi({"r", "p", "q"})});
  REQUIRE(charts_isomorphic(a, b));
  LocalChart c = chart_of({"p", "q", "r"}, {rel_pi({"p", "q"})});
  REQUIRE_FALSE(charts_isomorphic(a, c));
}

TEST_CASE("case table: the two deep-point models resolve as displayed") {
  // First case: double point against a double curve.  One blow-up splits the
  // chart into two standard pieces.
  LocalChart c1 = local_models_at(CurvePoint::Node, SurfPoint::DoubleCurve);
  auto k1 = blowup_chart(c1, "x1", "y1");
  REQUIRE(k1.size() == 2);
  REQUIRE(charts_isomorphic(k1[0], chart_of({"u", "v", "w", "t"}, {rel_pi({"u", "v", "w"})})));
  REQUIRE(charts_isomorphic(k1[1], chart_of({"u", "v", "w", "t"}, {rel_pi({"u", "v", "w"})})));
  REQUIRE(semistable_everywhere(k1[0]));
  REQUIRE(semistable_everywhere(k1[1]));

  // Second case: double point against a triple point.  One chart is already
  // standard with a four-fold product; the other survives with two relations.
  LocalChart c2 = local_models_at(CurvePoint::Node, SurfPoint::TriplePoint);
  auto k2 = blowup_chart(c2, "x1", "y1");
  REQUIRE(k2.size() == 2);
  LocalChart survivor = chart_of({"x1p", "x2", "y1", "y2", "y3"},
                                 {rel_pi({"y1", "y2", "y3"}), rel_eq({"x1p", "x2"}, {"y2", "y3"})});
  LocalChart quad = chart_of({"x1", "y1p", "y2", "y3"}, {rel_pi({"x1", "y1p", "y2", "y3"})});
  REQUIRE(charts_isomorphic(k2[0], survivor));
  REQUIRE(charts_isomorphic(k2[1], quad));
  REQUIRE_FALSE(semistable_everywhere(k2[0]));
  REQUIRE(semistable_everywhere(k2[1]));

  // Exactly one more blow-up fixes the survivor.
  auto k3 = blowup_chart(k2[0], "x1'", "y2");
  REQUIRE(k3.size() == 2);
  for (const auto& ch : k3) {
    REQUIRE(semistable_everywhere(ch));
    REQUIRE(charts_isomorphic(
        ch, chart_of({"a", "b", "c", "d"}, {rel_pi({"a", "b", "c", "d"})})));
  }

  // A center missing from the chart is a no-op.
  auto untouched = blowup_chart(c1, "x1", "zz");
  REQUIRE(untouched.size() == 1);
  REQUIRE(charts_isomorphic(untouched[0], c1));
}

TEST_CASE("scheduled resolution of the corpus configurations") {
  for (const auto& name : {"ss_triple.scn", "ss_chain.scn"}) {
    Scenario sc = load(name);
    REQUIRE(sc.semistable.has_value());
    FinalModel fm = run_schedule(sc.semistable->curve, sc.semistable->surface,
                                 sc.semistable->schedule);
    INFO(name);
    REQUIRE(fm.semistable);
    REQUIRE(fm.traces_match);
    for (const auto& p : fm.points) REQUIRE(p.semistable);
  }
}

TEST_CASE("trace bookkeeping on the triple-point configuration") {
  Scenario sc = load("ss_triple.scn");
  FinalModel fm = run_schedule(sc.semistable->curve, sc.semistable->surface,
                               sc.semistable->schedule);
  auto tr = [&](const char* a, const char* b) { return fm.recorded.at({a, b}); };
  std::vector<CompId> expect_11{{"A2", "B2"}, {"A2", "B3"}};
  REQUIRE(tr("A1", "B1") == expect_11);
  REQUIRE(tr("A1", "B2") == std::vector<CompId>{{"A2", "B3"}});
  REQUIRE(tr("A1", "B3").empty());
  REQUIRE(tr("A2", "B1").empty());
  REQUIRE(tr("A2", "B2") == std::vector<CompId>{{"A1", "B1"}});
  std::vector<CompId> expect_23{{"A1", "B1"}, {"A1", "B2"}};
  REQUIRE(tr("A2", "B3") == expect_23);
  // The raw pairwise-intersection list over-counts: centers that have
  // become Cartier mid-run are skipped, and the report flags it.
  REQUIRE_FALSE(fm.naive_matches);
}

TEST_CASE("fuzzed configurations resolve and trace correctly") {
  int runs = 0;
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    SpecialFiberCurve curve;
    long nc = rng.integer(1, 4);
    for (long i = 1; i <= nc; ++i) curve.components.push_back("A" + std::to_string(i));
    for (long i = 1; i < nc; ++i)
      if (rng.integer(0, 1))
        curve.nodes.push_back({curve.components[i - 1], curve.components[i]});
    if (nc > 1 && curve.nodes.empty())
      curve.nodes.push_back({curve.components[0], curve.components[1]});

    SpecialFiberSurface surf;
    long ns = rng.integer(1, 5);
    for (long i = 1; i <= ns; ++i) surf.components.push_back("B" + std::to_string(i));
    for (long i = 0; i < ns; ++i)
      for (long j = i + 1; j < ns; ++j)
        if (rng.integer(0, 2) != 0)
          surf.double_curves.push_back({surf.components[i], surf.components[j]});
    for (long i = 0; i < ns; ++i)
      for (long j = i + 1; j < ns; ++j)
        for (long k = j + 1; k < ns; ++k) {
          const auto& a = surf.components[i];
          const auto& b = surf.components[j];
          const auto& c = surf.components[k];
          if (surf.adjacent(a, b) && surf.adjacent(a, c) && surf.adjacent(b, c) &&
              rng.integer(0, 1))
            surf.triple_points.push_back({a, b, c});
        }

    Schedule sched;
    for (const auto& a : curve.components)
      for (const auto& b : surf.components) sched.push_back({a, b});
    std::shuffle(sched.begin(), sched.end(), rng.gen);

    FinalModel fm = run_schedule(curve, surf, sched);
    INFO("seed " << seed);
    REQUIRE(fm.semistable);
    REQUIRE(fm.traces_match);
    ++runs;
  }
  REQUIRE(runs >= 50);
}

TEST_CASE("schedule validation") {
  Scenario sc = load("ss_triple.scn");
  Schedule bad = sc.semistable->schedule;
  bad.pop_back();
  REQUIRE_THROWS_AS(run_schedule(sc.semistable->curve, sc.semistable->surface, bad), Error);
  bad = sc.semistable->schedule;
  bad[0] = bad[1];
  REQUIRE_THROWS_AS(run_schedule(sc.semistable->curve, sc.semistable->surface, bad), Error);
}
