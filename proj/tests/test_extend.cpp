#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "longcycle/extend.hpp"
#include "longcycle/gen.hpp"
#include "longcycle/oracle.hpp"

using namespace longcycle;

namespace {

// run match_case on every violating face; apply and validate each step
std::map<std::string, int> match_all_violations(const EmbeddedGraph& g, const Cycle& c) {
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  REQUIRE(!rep.violations.empty());
  std::map<std::string, int> cases;
  for (int fid : rep.violations) {
    auto step = match_case(g, ctx, fid);
    REQUIRE_MESSAGE(step.has_value(), "face " << fid << " matched no recipe");
    Cycle longer = apply_step(g, c, *step);
    CHECK(longer.length() > c.length());
    CHECK(is_isolating(g, longer));
    // the bounded search independently finds some rewrite on the same face
    auto alt = local_search_extension(g, ctx, fid, 11);
    CHECK(alt.has_value());
    cases[step->case_id]++;
  }
  return cases;
}

}  // namespace

TEST_CASE("basic extension on the kleetope base triangle") {
  EmbeddedGraph base = catalog_graph("octahedron");
  EmbeddedGraph k = kleetope(base);
  Cycle tri{k.faces().front().walk};
  auto ext = extendable_edges(k, tri);
  REQUIRE(!ext.empty());
  Cycle c4 = extend_basic(k, tri, ext.front().first, ext.front().second);
  CHECK(c4.length() == 4);

  // chaining two basic extensions adds two distinct vertices
  auto ext2 = extendable_edges(k, c4);
  REQUIRE(!ext2.empty());
  Cycle c5 = extend_basic(k, c4, ext2.front().first, ext2.front().second);
  CHECK(c5.length() == 5);
  std::set<int> s5(c5.vertices.begin(), c5.vertices.end());
  CHECK(s5.size() == 5);
}

TEST_CASE("a Hamiltonian cycle has nothing to extend") {
  EmbeddedGraph g = catalog_graph("octahedron");
  Cycle ham = hamiltonian_small(g);
  CHECK_THROWS_AS(extend_basic(g, ham, {ham.at(0), ham.at(1)}, 0), Error);
}

TEST_CASE("cases 2b and 4g fire on the shifted 2-face fixture") {
  EmbeddedGraph g = fixtures::two_face_pair();
  auto cases = match_all_violations(g, fixtures::base_cycle(8));
  CHECK(cases["2b"] == 3);
  CHECK(cases["4g"] == 1);
}

TEST_CASE("case 2b produces the documented rewrite") {
  EmbeddedGraph g = fixtures::two_face_pair();
  Cycle c = fixtures::base_cycle(8);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  // locate the inside 2-face over the C-edges (1,2),(2,3)
  int fid = -1;
  for (const auto& f : ctx.faces)
    if (f.cls == FaceClass::Minor && f.j == 2 && f.lone_vertex == 8 && f.arc_start == 1)
      fid = f.id;
  REQUIRE(fid >= 0);
  auto step = match_case(g, ctx, fid);
  REQUIRE(step.has_value());
  CHECK(step->case_id == "2b");
  CHECK(step->removed_subpath == std::vector<int>{1, 2, 3, 4});
  CHECK(step->replacement_path == std::vector<int>{1, 8, 3, 2, 9, 4});
  std::set<int> absorbed(step->absorbed.begin(), step->absorbed.end());
  CHECK(absorbed == std::set<int>{8, 9});
  Cycle longer = apply_step(g, c, *step);
  CHECK(longer.length() == 10);
  // after the rewrite the absorbed vertices stop being common neighbors
  for (auto& [e, v] : extendable_edges(g, longer)) {
    CHECK(v != 8);
    CHECK(v != 9);
  }
}

TEST_CASE("cases 2c, 2b, 3-2c and 4b fire on the 2-vs-3 fixture") {
  EmbeddedGraph g = fixtures::two_face_vs_three_face();
  auto cases = match_all_violations(g, fixtures::base_cycle(8));
  CHECK(cases["2c"] == 1);
  CHECK(cases["2b"] == 2);
  CHECK(cases["3-2c"] >= 1);
  // the 4-face is claimed in the reflected orientation by the 4b recipe,
  // whose chord rewrite is verified like every other step
  CHECK(cases["4b2"] == 1);
}

TEST_CASE("case 2c applies the chord rewrite") {
  EmbeddedGraph g = fixtures::two_face_vs_three_face();
  Cycle c = fixtures::base_cycle(8);
  CycleContext ctx = build_context(g, c);
  int fid = -1;
  for (const auto& f : ctx.faces)
    if (f.cls == FaceClass::Minor && f.j == 2 && f.lone_vertex == 8 && f.arc_start == 1)
      fid = f.id;
  REQUIRE(fid >= 0);
  auto step = match_case(g, ctx, fid);
  REQUIRE(step.has_value());
  CHECK(step->case_id == "2c");
  CHECK(step->removed_subpath == std::vector<int>{1, 2, 3, 4});
  CHECK(step->replacement_path == std::vector<int>{1, 8, 3, 2, 4});
}

TEST_CASE("cases 3a and 4a fire on the flanked 3-face fixture") {
  EmbeddedGraph g = fixtures::three_face_flanked();
  auto cases = match_all_violations(g, fixtures::base_cycle(10));
  CHECK(cases["3a"] == 1);
  CHECK(cases["4a"] == 1);
  CHECK(cases["3-2c"] >= 1);
}

TEST_CASE("case 3a absorbs all three lone vertices") {
  EmbeddedGraph g = fixtures::three_face_flanked();
  Cycle c = fixtures::base_cycle(10);
  CycleContext ctx = build_context(g, c);
  int fid = -1;
  for (const auto& f : ctx.faces)
    if (f.cls == FaceClass::Minor && f.j == 3 && f.lone_vertex == 10 && f.arc_start == 1)
      fid = f.id;
  REQUIRE(fid >= 0);
  auto step = match_case(g, ctx, fid);
  REQUIRE(step.has_value());
  CHECK(step->case_id == "3a");
  std::set<int> absorbed(step->absorbed.begin(), step->absorbed.end());
  CHECK(absorbed == std::set<int>{10, 11, 12});
  Cycle longer = apply_step(g, c, *step);
  CHECK(longer.length() == 13);
}

TEST_CASE("case 5e fires on the 5-face sender fixture") {
  EmbeddedGraph g = fixtures::five_face_sender();
  Cycle c = fixtures::base_cycle(12);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  auto cases = match_all_violations(g, c);
  CHECK(cases["5e"] == 1);
  CHECK(cases["3-2c"] == 1);
  CHECK(cases["2c"] == 1);
  // the violating 5-face ends at exactly 2 = 6 thirds
  for (int fid : rep.violations)
    if (ctx.faces[fid].j == 5) CHECK(rep.final_weights[fid].value == 6);
}

TEST_CASE("case 6c fires on the 6-face sender fixture") {
  EmbeddedGraph g = fixtures::six_face_sender();
  Cycle c = fixtures::base_cycle(14);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  auto cases = match_all_violations(g, c);
  CHECK(cases["6c"] == 1);
  CHECK(cases["4a"] == 1);
  // the 6c rewrite reroutes through both lone vertices and keeps the window
  int fid = -1;
  for (const auto& f : ctx.faces)
    if (f.cls == FaceClass::Minor && f.j == 6) fid = f.id;
  REQUIRE(fid >= 0);
  CHECK(rep.final_weights[fid].value == 9);
  auto step = match_case(g, ctx, fid);
  REQUIRE(step.has_value());
  CHECK(step->case_id == "6c");
  CHECK(step->replacement_path == std::vector<int>{0, 14, 6, 1, 2, 3, 4, 5, 17, 7});
  CHECK(apply_step(g, c, *step).length() == 16);
}

TEST_CASE("case 5a: the mutual 5-face exchange ends at weight 3 and extends") {
  EmbeddedGraph g = fixtures::five_face_exchange();
  Cycle c = fixtures::base_cycle(16);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  // both 5-faces exchange 1/3 and send 3*(2/3) to their 2-faces: final 5-2=3
  int five_faces = 0;
  for (int fid : rep.violations) {
    if (ctx.faces[fid].j != 5) continue;
    ++five_faces;
    CHECK(rep.final_weights[fid].value == 9);
    auto step = match_case(g, ctx, fid);
    REQUIRE(step.has_value());
    CHECK(step->case_id == "5a");
    CHECK(apply_step(g, c, *step).length() == 17);
  }
  CHECK(five_faces == 2);
  // the mutual R5 exchange is logged in both directions
  int r5 = 0;
  for (const auto& t : rep.transfers)
    if (t.rule == Rule::R5) ++r5;
  CHECK(r5 == 2);
  auto cases = match_all_violations(g, c);
  CHECK(cases["5a"] == 2);
}

TEST_CASE("case 7b fires on the tiled 7-face fixture") {
  EmbeddedGraph g = fixtures::seven_face_row();
  Cycle c = fixtures::base_cycle(16);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  REQUIRE(rep.violations.size() == 1);
  int fid = rep.violations.front();
  CHECK(ctx.faces[fid].j == 7);
  CHECK(rep.final_weights[fid].value == 8);
  auto step = match_case(g, ctx, fid);
  REQUIRE(step.has_value());
  CHECK(step->case_id == "7b");
  CHECK(step->replacement_path == std::vector<int>{0, 2, 1, 18, 3});
  Cycle longer = apply_step(g, c, *step);
  CHECK(longer.length() == 17);
  CHECK(local_search_extension(g, ctx, fid, 11).has_value());
}

TEST_CASE("radius sweep: a small window misses, a larger one finds") {
  EmbeddedGraph g = fixtures::three_face_flanked();
  Cycle c = fixtures::base_cycle(10);
  CycleContext ctx = build_context(g, c);
  DischargeReport rep = run_discharging(g, ctx);
  // the 3a face needs the window (0..5); radius 3 cannot contain its arc
  int fid = -1;
  for (const auto& f : ctx.faces)
    if (f.cls == FaceClass::Minor && f.j == 3 && f.lone_vertex == 10 && f.arc_start == 1)
      fid = f.id;
  REQUIRE(fid >= 0);
  CHECK_FALSE(local_search_extension(g, ctx, fid, 3).has_value());
  CHECK(local_search_extension(g, ctx, fid, 11).has_value());
  (void)rep;
}

TEST_CASE("every violating face of every small fixpoint context matches a recipe") {
  // enumerate isolating cycles on small essentially 4-connected instances,
  // discharge every fixpoint context, and demand a verified catalog step (or
  // at minimum a search rewrite) for every violating face, with no
  // contradiction branch ever reached on valid input
  std::vector<EmbeddedGraph> insts;
  for (int n = 6; n <= 8; ++n)
    for (const auto& t : triangulations_of_order(n))
      if (is_4_connected(t)) {
        insts.push_back(kleetope(t));
        for (int fid = 0; fid < t.face_count(); fid += 3) {
          try {
            insts.push_back(partial_kleetope(t, {fid, (fid + 3) % t.face_count()}));
          } catch (const Error&) {
          }
        }
      }
  long long violations = 0;
  int unmatched = 0;
  for (const auto& g : insts) {
    auto cycles = enumerate_isolating_cycles(g, 800);
    for (const auto& c : cycles) {
      if (c.length() < 8 || !extendable_edges(g, c).empty()) continue;
      CycleContext ctx = build_context(g, c);
      if (ctx.v_minus.empty() || ctx.v_plus.empty()) continue;
      DischargeReport rep = run_discharging(g, ctx);
      for (int fid : rep.violations) {
        ++violations;
        std::optional<ExtensionStep> step;
        CHECK_NOTHROW(step = match_case(g, ctx, fid));
        if (!step) {
          ++unmatched;
          CHECK(local_search_extension(g, ctx, fid, 11).has_value());
          continue;
        }
        Cycle longer = apply_step(g, c, *step);
        CHECK(longer.length() > c.length());
      }
    }
  }
  CHECK(violations >= 300);
  CHECK(unmatched == 0);
}

TEST_CASE("hamiltonian_small on the named small graphs") {
  for (const char* name : {"octahedron", "W5", "cube"}) {
    EmbeddedGraph g = catalog_graph(name);
    Cycle c = hamiltonian_small(g);
    CHECK(c.length() == g.vertex_count());
  }
}

TEST_CASE("long_cycle on the octahedron takes the Hamiltonian branch") {
  Certificate cert = long_cycle(catalog_graph("octahedron"));
  CHECK(cert.kind == "hamiltonian");
  CHECK(cert.cycle.length() == 6);
  CHECK(cert.cycle.length() >= theorem_bound(6));
}

TEST_CASE("long_cycle rejects W6") {
  CHECK_THROWS_AS(long_cycle(catalog_graph("W6")), Error);
  try {
    long_cycle(catalog_graph("W6"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEssentially4Connected);
  }
}

TEST_CASE("long_cycle on the kleetope of the octahedron meets the bound") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  Certificate cert = long_cycle(k);
  CHECK(cert.cycle.length() >= theorem_bound(14));  // >= 10
  CHECK(is_isolating(k, cert.cycle));
  CHECK_FALSE(cert.fallback_used);
  CHECK(cert.iterations <= k.vertex_count());
  // every applied step grew the cycle and kept the old vertices
  for (const auto& s : cert.steps)
    CHECK(s.replacement_path.size() > s.removed_subpath.size());
}

TEST_CASE("bootstrap finds an isolating cycle of length at least 8") {
  for (const char* name : {"icosahedron", "bipyramid12"}) {
    EmbeddedGraph g = catalog_graph(name);
    Cycle c = initial_isolating_cycle(g);
    CHECK(c.length() >= 8);
    CHECK(is_isolating(g, c));
  }
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  Cycle c = initial_isolating_cycle(k);
  CHECK(c.length() >= 8);
  CHECK(is_isolating(k, c));
}

TEST_CASE("flip invariance of the final length") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  Certificate a = long_cycle(k);
  Certificate b = long_cycle(k.mirrored());
  CHECK(a.cycle.length() == b.cycle.length());
  // and across a corpus sample, where the greedy paths would otherwise differ
  auto corpus = e4c_corpus(40);
  for (size_t i = 0; i < corpus.size(); i += 5) {
    Certificate x = long_cycle(corpus[i]);
    Certificate y = long_cycle(corpus[i].mirrored());
    CHECK(x.cycle.length() == y.cycle.length());
  }
}

TEST_CASE("icosahedron: any isolating fixpoint is fine, bound holds") {
  Certificate cert = long_cycle(catalog_graph("icosahedron"));
  CHECK(cert.cycle.length() >= theorem_bound(12));
  auto oracle = circumference_bruteforce(catalog_graph("icosahedron"));
  CHECK(cert.cycle.length() <= oracle.circumference);
}
