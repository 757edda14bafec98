#pragma once

#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

// embedding from a consistently oriented face list (every directed edge on
// exactly one face)
EmbeddedGraph from_faces(int n, const std::vector<std::vector<int>>& faces);

// fixed fixtures: triangle, k4, path4, W5, W6, cube, octahedron, icosahedron,
// bipyramid<k> (k-gonal bipyramid, e.g. "bipyramid6")
EmbeddedGraph catalog_graph(const std::string& name);

EmbeddedGraph bipyramid(int k);

// one new degree-3 vertex per face of a 4-connected planar triangulation,
// re-validated with the essential-4-connectivity post-check
EmbeddedGraph kleetope(const EmbeddedGraph& base);

// insertion into a subset of faces; same post-check
EmbeddedGraph partial_kleetope(const EmbeddedGraph& base, const std::vector<int>& face_ids);

// canonical code of the embedded graph up to relabeling, rotation of the
// embedding and reflection; equal codes = isomorphic plane graphs
std::string canonical_plane_code(const EmbeddedGraph& g);

// all planar triangulations on n vertices (diagonal-flip closure from the
// bipyramid seed), deduplicated by canonical code
std::vector<EmbeddedGraph> triangulations_of_order(int n);

enum class IngestFilter { EssentiallyFourConnected, ThreeConnected, FourConnectedTriangulation };

struct IngestSummary {
  int total = 0;
  int kept = 0;
};

std::vector<EmbeddedGraph> ingest_filtered(const std::string& planar_code_bytes,
                                           IngestFilter filter, IngestSummary* summary = nullptr);

// corpus builders used by the CLI and the test suites
std::vector<EmbeddedGraph> small_3connected_corpus(int min_count);              // n <= 10
std::vector<EmbeddedGraph> e4c_corpus(int min_count, unsigned seed = 20240429); // 11 <= n <= 32

}  // namespace longcycle
