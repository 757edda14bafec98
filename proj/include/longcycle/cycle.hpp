#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

struct Cycle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  int at(int i) const {
    int c = length();
    return vertices[((i % c) + c) % c];
  }
};

void validate_cycle(const EmbeddedGraph& g, const Cycle& c);

// true iff every component of G - V(C) is a single vertex of degree 3 in G
bool is_isolating(const EmbeddedGraph& g, const Cycle& c);

// cycle edges (c[i], c[i+1]) whose endpoints have a common neighbor off the
// cycle, paired with the least such neighbor
std::vector<std::pair<Edge, int>> extendable_edges(const EmbeddedGraph& g, const Cycle& c);

std::string to_cycle_text(const Cycle& c);
Cycle parse_cycle_text(const std::string& line);

enum class FaceClass { Minor, Major, CycleBounded };
enum class Side { Inside, Outside };

const char* face_class_name(FaceClass c);
const char* side_name(Side s);

struct ContextFace {
  int id = -1;
  Side side = Side::Inside;
  FaceClass cls = FaceClass::Major;
  int j = 0;                    // number of C-edges
  std::vector<int> c_edges;     // cycle-edge ids: id i is edge (c[i], c[i+1])
  int lone_vertex = -1;         // the unique off-cycle vertex when minor
  int arc_start = -1;           // minor: C-edge ids arc_start..arc_start+j-1 (mod c)
  std::vector<int> walk;        // boundary walk of the face in h
};

// The derived structure of one cycle: the chord-free graph h, the two vertex
// sides, face classification and C-edge incidences, and the opposite-face map.
struct CycleContext {
  Cycle cycle;
  EmbeddedGraph h;
  std::vector<Edge> chords;
  std::vector<int> pos_on_cycle;       // vertex -> cycle position, -1 off cycle
  std::vector<int> v_minus, v_plus;    // strictly inside / outside
  std::vector<ContextFace> faces;
  std::vector<std::array<int, 2>> edge_faces;  // cycle-edge id -> its two face ids
  std::map<std::pair<int, int>, int> m;        // (min fid, max fid) -> shared C-edges

  int c() const { return cycle.length(); }
  int cycle_edge_id(int u, int v) const;       // -1 if (u,v) not a cycle edge
  int opposite(int face_id, int c_edge_id) const;
  int m_between(int f1, int f2) const;
  int minor_count() const;
  // the cycle edge id between positions p and p+1
  int edge_at(int pos) const { return ((pos % c()) + c()) % c(); }
};

CycleContext build_context(const EmbeddedGraph& g, const Cycle& c);

}  // namespace longcycle
