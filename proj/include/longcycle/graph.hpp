#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "longcycle/errors.hpp"

namespace longcycle {

using Edge = std::pair<int, int>;  // undirected, stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// One face of an embedding: the closed walk of directed edges, stored as the
// vertex sequence v0,v1,...,vk-1 with directed edges (v0,v1),...,(vk-1,v0).
struct Face {
  std::vector<int> walk;
  int length() const { return static_cast<int>(walk.size()); }
};

// Simple connected plane graph given by clockwise rotations. Immutable after
// construction; faces are derived by next-edge traversal and the Euler
// formula certifies the sphere embedding.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;  // empty placeholder; build via from_rotations
  static EmbeddedGraph from_rotations(std::vector<std::vector<int>> rotations);

  int vertex_count() const { return n_; }
  int edge_count() const { return e_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  // Embedding with all rotations reversed (the other reflection).
  EmbeddedGraph mirrored() const;

  // Plane subgraph with the given undirected edges removed.
  EmbeddedGraph without_edges(const std::vector<Edge>& removed) const;

 private:
  void build_derived();

  int n_ = 0;
  int e_ = 0;
  std::vector<std::vector<int>> rot_;
  std::vector<char> adj_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

struct Separator {
  std::vector<int> vertices;
  std::vector<std::vector<int>> components_after_removal;
};

struct E4CResult {
  bool ok = false;
  Separator witness;  // one non-trivial 3-separator when !ok
};

// Rotation-system text format:  "n <count>" then "<v>: <u1> <u2> ..." lines,
// '#' starts a comment, ids 0-based.
EmbeddedGraph parse_rotation_text(const std::string& input);
std::string to_rotation_text(const EmbeddedGraph& g, const std::string& comment = "");

// planar_code, n<=255 variant: ">>planar_code<<" header, per graph one byte n
// then for each vertex its neighbors (1-based) in rotation order, 0-terminated.
std::vector<EmbeddedGraph> parse_planar_code(const std::string& bytes);
std::string to_planar_code(const std::vector<EmbeddedGraph>& gs);
std::string planar_code_header();

std::vector<std::vector<int>> components_after_removal(const EmbeddedGraph& g,
                                                       const std::vector<int>& removed);

bool is_connected(const EmbeddedGraph& g);
bool is_3_connected(const EmbeddedGraph& g);
bool is_4_connected(const EmbeddedGraph& g);
bool is_triangulation(const EmbeddedGraph& g);

// ok iff every 3-separator is trivial (isolates a single vertex). Also checks
// that every 3-separator of a 3-connected plane graph leaves exactly two
// components and raises InternalError otherwise.
E4CResult essential_4_connectivity(const EmbeddedGraph& g);

// All 3-separators, each as a sorted triple (used by essential_4_connectivity
// and by tests against the naive 3-subset oracle).
std::vector<std::array<int, 3>> all_3_separators(const EmbeddedGraph& g);

}  // namespace longcycle
