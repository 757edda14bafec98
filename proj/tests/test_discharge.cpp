#include <doctest.h>

#include "fixtures.hpp"
#include "longcycle/discharge.hpp"
#include "longcycle/extend.hpp"
#include "longcycle/gen.hpp"
#include "longcycle/jsonio.hpp"

using namespace longcycle;

TEST_CASE("theorem bound arithmetic") {
  CHECK(theorem_bound(6) == 5);
  CHECK(theorem_bound(14) == 10);
  CHECK(theorem_bound(8) == 7);  // ceil(50/8) = 7
  // c=8, |M|=4, |V-|+|V+|=2, n=10: 2c >= (10/3)|M| and c >= 5(n+2)/8
  CHECK(6 * 8 >= 10 * 4);
  CHECK(8 >= theorem_bound(10));
}

TEST_CASE("empty side is refused") {
  EmbeddedGraph g = catalog_graph("octahedron");
  Cycle c = hamiltonian_small(g);
  CycleContext ctx = build_context(g, c);
  CHECK_THROWS_AS(run_discharging(g, ctx), Error);
  try {
    run_discharging(g, ctx);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySide);
  }
}

TEST_CASE("extendable edge is refused") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  // a 4-cycle around one inserted vertex plus a base edge: still extendable
  Cycle c = hamiltonian_small(catalog_graph("octahedron"));
  // c on the kleetope has extendable edges (inserted vertices off the cycle)
  REQUIRE_FALSE(extendable_edges(k, c).empty());
  CycleContext ctx = build_context(k, c);
  if (!ctx.v_minus.empty() && !ctx.v_plus.empty()) {
    CHECK_THROWS_AS(run_discharging(k, ctx), Error);
  }
}

TEST_CASE("hand-simulated weights on the shifted 2-face pair fixture") {
  EmbeddedGraph g = fixtures::two_face_pair();
  Cycle c = fixtures::base_cycle(8);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  CHECK(rep.conservation_ok);
  CHECK(rep.lemma1_ok);

  // by shape: the inside 2-face over edges (1,2),(2,3) ends at 8 thirds, the
  // outside 2-face over (2,3),(3,4) at 6, the 4-face at 6; the two 3-faces
  // end exactly at 10
  std::map<std::pair<int, int>, int> by_shape;  // (class, j) -> min final
  int violations = 0;
  for (const auto& f : ctx.faces) {
    int w = rep.final_weights[f.id].value;
    if (f.cls == FaceClass::Minor && f.j == 3) CHECK(w == 10);
    if (f.cls == FaceClass::Minor && f.j == 4) CHECK(w == 6);
    if (f.cls == FaceClass::Minor && w < 10) ++violations;
  }
  CHECK(violations == static_cast<int>(rep.violations.size()));
  CHECK(rep.violations.size() == 4);  // three 2-faces and the 4-face
  CHECK_FALSE(rep.inequality1_ok);
  CHECK_THROWS_AS(check_inequality1(rep, ctx), Error);
}

TEST_CASE("a minor 2-face between two majors ends at exactly 12 thirds") {
  // R1 brings 1 across each of its two C-edges and it sends nothing
  auto corpus = e4c_corpus(60);
  int found = 0;
  for (const auto& g : corpus) {
    Certificate cert = long_cycle(g);
    if (cert.kind != "discharging") continue;
    CycleContext ctx = build_context(g, cert.cycle);
    DischargeReport rep = run_discharging(g, ctx);
    for (const auto& f : ctx.faces) {
      if (f.cls != FaceClass::Minor || f.j != 2) continue;
      bool both_major = true;
      for (int eid : f.c_edges)
        if (ctx.faces[ctx.opposite(f.id, eid)].cls != FaceClass::Major) both_major = false;
      if (both_major) {
        ++found;
        CHECK(rep.final_weights[f.id].value == 12);
      }
    }
  }
  CHECK(found >= 1);
}

TEST_CASE("conservation and determinism on every fixture") {
  struct Item {
    EmbeddedGraph g;
    int c;
  };
  for (auto item : {Item{fixtures::two_face_pair(), 8},
                    Item{fixtures::two_face_vs_three_face(), 8},
                    Item{fixtures::three_face_flanked(), 10}}) {
    CycleContext ctx = build_context(item.g, fixtures::base_cycle(item.c));
    DischargeReport r1 = run_discharging(item.g, ctx);
    DischargeReport r2 = run_discharging(item.g, ctx);
    CHECK(r1.conservation_ok);
    long long total = 0;
    for (const auto& t : r1.final_weights) total += t.value;
    CHECK(total == 6LL * item.c);
    // byte-identical reports on identical contexts
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
    // transfers only move weight between faces sharing a C-edge
    for (const auto& t : r1.transfers) {
      CHECK(!t.via_edges.empty());
      CHECK(ctx.m_between(t.from_face, t.to_face) >= 1);
      for (int eid : t.via_edges) {
        auto [a, b] = ctx.edge_faces[eid];
        CHECK(((a == t.from_face && b == t.to_face) || (a == t.to_face && b == t.from_face)));
      }
    }
  }
}

TEST_CASE("check_inequality1 accepts a violation-free fixpoint") {
  // drive the solver on the kleetope of the octahedron to a fixpoint
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  Certificate cert = long_cycle(k);
  REQUIRE(cert.kind == "discharging");
  REQUIRE(cert.report.has_value());
  CycleContext ctx = build_context(k, cert.cycle);
  CHECK(check_inequality1(*cert.report, ctx));
  CHECK(cert.report->inequality1_ok);
  CHECK(cert.report->lemma1_ok);
}

TEST_CASE("synthetic report with a face below 10 thirds is rejected") {
  EmbeddedGraph g = fixtures::two_face_pair();
  CycleContext ctx = build_context(g, fixtures::base_cycle(8));
  DischargeReport rep = run_discharging(g, ctx);
  REQUIRE(!rep.violations.empty());
  CHECK_THROWS_AS(check_inequality1(rep, ctx), Error);
  try {
    check_inequality1(rep, ctx);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ViolationsPresent);
  }
}
