#include <doctest.h>

#include <set>

#include "longcycle/extend.hpp"
#include "longcycle/gen.hpp"
#include "longcycle/oracle.hpp"

using namespace longcycle;

TEST_CASE("triangle circumference is 3") {
  CHECK(circumference_bruteforce(catalog_graph("triangle")).circumference == 3);
}

TEST_CASE("octahedron circumference is 6") {
  auto res = circumference_bruteforce(catalog_graph("octahedron"));
  CHECK(res.circumference == 6);
  CHECK(res.witness.length() == 6);
}

TEST_CASE("kleetope of the octahedron: pinned circumference") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  auto res = circumference_bruteforce(k);
  // pinned after the first oracle run; inside the stated window and equal to
  // the extremal family's value 2/3(n+4) = 12
  CHECK(res.circumference == 12);
  CHECK(res.circumference >= 10);
  CHECK(res.circumference <= 14);
  CHECK(res.circumference <= 2 * (14 + 4) / 3);
}

TEST_CASE("budget exhaustion raises") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  CHECK_THROWS_AS(circumference_bruteforce(k, 10), Error);
  try {
    circumference_bruteforce(k, 10);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("octahedron: every isolating cycle is Hamiltonian") {
  EmbeddedGraph g = catalog_graph("octahedron");
  auto cycles = enumerate_isolating_cycles(g, 1000);
  CHECK(!cycles.empty());
  for (const auto& c : cycles) {
    CHECK(c.length() == 6);
    CHECK(is_isolating(g, c));
  }
  // canonical form deduplicates rotations and reflections
  std::set<std::vector<int>> keys;
  for (const auto& c : cycles) keys.insert(canonical_cycle(c).vertices);
  CHECK(keys.size() == cycles.size());
}

TEST_CASE("W6 isolating cycles verified pointwise") {
  EmbeddedGraph g = catalog_graph("W6");
  auto cycles = enumerate_isolating_cycles(g, 1000);
  for (const auto& c : cycles) CHECK(is_isolating(g, c));
}

TEST_CASE("truncation contract") {
  EmbeddedGraph k = kleetope(catalog_graph("octahedron"));
  auto cycles = enumerate_isolating_cycles(k, 5);
  CHECK(cycles.size() == 5);
  for (const auto& c : cycles) CHECK(is_isolating(k, c));
}

TEST_CASE("canonical cycle: least vertex first, lexicographically smaller direction") {
  Cycle c{{4, 2, 7, 1, 9}};
  Cycle canon = canonical_cycle(c);
  CHECK(canon.vertices.front() == 1);
  Cycle rotated{{7, 1, 9, 4, 2}};
  Cycle reversed{{9, 1, 7, 2, 4}};
  CHECK(canonical_cycle(rotated).vertices == canon.vertices);
  CHECK(canonical_cycle(reversed).vertices == canon.vertices);
}

TEST_CASE("solver output never beats the oracle and both meet the bound") {
  for (const char* name : {"octahedron", "icosahedron"}) {
    EmbeddedGraph g = catalog_graph(name);
    Certificate cert = long_cycle(g);
    auto oracle = circumference_bruteforce(g);
    CHECK(cert.cycle.length() <= oracle.circumference);
    CHECK(cert.cycle.length() >= theorem_bound(g.vertex_count()));
    CHECK(oracle.circumference >= theorem_bound(g.vertex_count()));
    validate_cycle(g, oracle.witness);
  }
}

TEST_CASE("isolating cycles of length at least 8 exist at n >= 11") {
  for (const char* name : {"icosahedron", "bipyramid10"}) {
    EmbeddedGraph g = catalog_graph(name);
    auto cycles = enumerate_isolating_cycles(g, 4000);
    bool long_enough = false;
    for (const auto& c : cycles)
      if (c.length() >= 8) long_enough = true;
    CHECK(long_enough);
  }
}
