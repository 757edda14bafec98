#include <doctest.h>

#include <set>

#include "longcycle/gen.hpp"
#include "longcycle/graph.hpp"

using namespace longcycle;

TEST_CASE("catalog names and shapes") {
  CHECK(catalog_graph("octahedron").vertex_count() == 6);
  CHECK(catalog_graph("octahedron").face_count() == 8);
  CHECK(catalog_graph("icosahedron").vertex_count() == 12);
  CHECK(catalog_graph("icosahedron").face_count() == 20);
  CHECK(catalog_graph("W5").vertex_count() == 6);
  CHECK(catalog_graph("W6").vertex_count() == 7);
  CHECK_THROWS_AS(catalog_graph("dodecahedron"), Error);
  try {
    catalog_graph("nope");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
}

TEST_CASE("W6 is the negative fixture") {
  CHECK_FALSE(essential_4_connectivity(catalog_graph("W6")).ok);
}

TEST_CASE("kleetope of the octahedron") {
  EmbeddedGraph base = catalog_graph("octahedron");
  EmbeddedGraph k = kleetope(base);
  CHECK(k.vertex_count() == 14);  // 6 + 8
  for (int v = 6; v < 14; ++v) CHECK(k.degree(v) == 3);
  CHECK(essential_4_connectivity(k).ok);
  CHECK(is_triangulation(k));
}

TEST_CASE("kleetope of the icosahedron") {
  EmbeddedGraph k = kleetope(catalog_graph("icosahedron"));
  CHECK(k.vertex_count() == 32);  // 12 + 20
  CHECK(essential_4_connectivity(k).ok);
}

TEST_CASE("kleetope refuses non-triangulations") {
  CHECK_THROWS_AS(kleetope(catalog_graph("cube")), Error);
  try {
    kleetope(catalog_graph("cube"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTriangulation);
  }
}

TEST_CASE("kleetope is deterministic in face id order") {
  EmbeddedGraph a = kleetope(catalog_graph("octahedron"));
  EmbeddedGraph b = kleetope(catalog_graph("octahedron"));
  CHECK(a.rotations() == b.rotations());
}

TEST_CASE("bipyramids are 4-connected triangulations") {
  for (int k : {4, 6, 9}) {
    EmbeddedGraph g = bipyramid(k);
    CHECK(g.vertex_count() == k + 2);
    CHECK(is_triangulation(g));
    CHECK(is_4_connected(g));
  }
}

TEST_CASE("flip closure counts all small triangulations") {
  CHECK(triangulations_of_order(4).size() == 1);
  CHECK(triangulations_of_order(5).size() == 1);
  CHECK(triangulations_of_order(6).size() == 2);
  CHECK(triangulations_of_order(7).size() == 5);
  CHECK(triangulations_of_order(8).size() == 14);
}

TEST_CASE("canonical codes identify plane-isomorphic graphs") {
  EmbeddedGraph g = catalog_graph("octahedron");
  CHECK(canonical_plane_code(g) == canonical_plane_code(g.mirrored()));
  // relabeled octahedron: swap two labels consistently
  auto rot = g.rotations();
  std::swap(rot[0], rot[5]);
  for (auto& r : rot)
    for (int& u : r) u = u == 0 ? 5 : (u == 5 ? 0 : u);
  EmbeddedGraph relabeled = EmbeddedGraph::from_rotations(rot);
  CHECK(canonical_plane_code(g) == canonical_plane_code(relabeled));
  CHECK(canonical_plane_code(g) != canonical_plane_code(catalog_graph("cube")));
}

TEST_CASE("ingest filters") {
  std::vector<EmbeddedGraph> mixed{catalog_graph("octahedron"), catalog_graph("W6"),
                                   catalog_graph("cube"), bipyramid(6)};
  std::string bytes = to_planar_code(mixed);

  IngestSummary sum;
  auto e4c = ingest_filtered(bytes, IngestFilter::EssentiallyFourConnected, &sum);
  CHECK(sum.total == 4);
  // the cube passes too: every 3-separator of a 3-regular graph is a
  // neighborhood, hence trivial
  CHECK(e4c.size() == 3);
  for (const auto& g : e4c) CHECK(essential_4_connectivity(g).ok);

  auto three = ingest_filtered(bytes, IngestFilter::ThreeConnected, nullptr);
  CHECK(three.size() == 4);

  auto fourct = ingest_filtered(bytes, IngestFilter::FourConnectedTriangulation, nullptr);
  CHECK(fourct.size() == 2);
}

TEST_CASE("the octahedron is the unique 4-connected triangulation on 6 vertices") {
  auto all6 = triangulations_of_order(6);
  std::string bytes = to_planar_code(all6);
  auto kept = ingest_filtered(bytes, IngestFilter::FourConnectedTriangulation, nullptr);
  REQUIRE(kept.size() == 1);
  CHECK(canonical_plane_code(kept[0]) == canonical_plane_code(catalog_graph("octahedron")));
}

TEST_CASE("empty planar_code file after the header") {
  auto gs = parse_planar_code(planar_code_header());
  CHECK(gs.empty());
}

TEST_CASE("corpus members re-validate") {
  auto corpus = e4c_corpus(60);
  CHECK(corpus.size() >= 60);
  for (const auto& g : corpus) {
    CHECK(g.vertex_count() >= 11);
    CHECK(g.vertex_count() <= 32);
    CHECK(essential_4_connectivity(g).ok);
  }
}

TEST_CASE("partial kleetope honors the post-check") {
  EmbeddedGraph base = catalog_graph("octahedron");
  EmbeddedGraph g = partial_kleetope(base, {0, 3, 5});
  CHECK(g.vertex_count() == 9);
  CHECK(essential_4_connectivity(g).ok);
}
