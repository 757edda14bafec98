#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/cycle.hpp"
#include "longcycle/discharge.hpp"

namespace longcycle {

// One case-labeled rewrite of the cycle: a subpath (in cycle order) is
// replaced by a strictly longer path with the same endpoints that keeps every
// old vertex and absorbs new ones.
struct ExtensionStep {
  std::string case_id;                // "basic", "2b", ..., "9", "search"
  std::vector<int> removed_subpath;   // consecutive cycle vertices
  std::vector<int> replacement_path;  // same endpoints, strictly longer
  std::vector<int> absorbed;
  int face = -1;                      // violating face the step was derived for
};

// Applies and fully validates a step: new cycle is a valid isolating cycle,
// strictly longer, with V(C) contained in it. InternalError on any failure.
Cycle apply_step(const EmbeddedGraph& g, const Cycle& c, const ExtensionStep& step);

// Replaces cycle edge e=(x,y) by (x,v,y) for an extendable edge.
Cycle extend_basic(const EmbeddedGraph& g, const Cycle& c, Edge e, int v);
ExtensionStep basic_step(const Cycle& c, Edge e, int v);

// The case catalog. Returns a step for the violating minor face, or nullopt
// (Unmatched). Throws InternalError when a contradiction branch is reached:
// the proof shows a valid essentially 4-connected input cannot get there.
std::optional<ExtensionStep> match_case(const EmbeddedGraph& g, const CycleContext& ctx,
                                        int face_id);

// Independent bounded search: tries every rewrite of a C-subpath inside a
// window of at most `radius` cycle vertices around the face, using chords and
// off-cycle vertices adjacent to the window.
std::optional<ExtensionStep> local_search_extension(const EmbeddedGraph& g,
                                                    const CycleContext& ctx, int face_id,
                                                    int radius = 11,
                                                    std::int64_t budget = 4'000'000);

// Bootstrap: some isolating cycle of length >= 8 (n >= 11, essentially
// 4-connected input). Grows a face boundary; exhaustive backtracking fallback
// for n <= 24; SearchExhausted beyond that.
Cycle initial_isolating_cycle(const EmbeddedGraph& g);

// Hamiltonian cycle of a 3-connected plane graph on n <= 10 vertices.
Cycle hamiltonian_small(const EmbeddedGraph& g);

struct Certificate {
  std::string kind;  // "discharging" | "side-empty" | "hamiltonian"
  Cycle cycle;
  std::optional<DischargeReport> report;
  std::vector<ExtensionStep> steps;
  bool fallback_used = false;
  int iterations = 0;
};

struct LongCycleOptions {
  bool assume_valid = false;      // skip the essential-4-connectivity precheck
  bool cross_check_steps = false; // re-derive every catalog step via local search
  int search_radius = 11;
};

Certificate long_cycle(const EmbeddedGraph& g, const LongCycleOptions& opt = {});

}  // namespace longcycle
