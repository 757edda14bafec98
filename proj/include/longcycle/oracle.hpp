#pragma once

#include <cstdint>
#include <vector>

#include "longcycle/cycle.hpp"

namespace longcycle {

struct OracleResult {
  int circumference = 0;
  Cycle witness;
  std::int64_t explored = 0;  // search nodes
};

// Exact circumference by DFS backtracking with canonical start-vertex pruning.
// BudgetExceeded when node_budget search nodes are spent.
OracleResult circumference_bruteforce(const EmbeddedGraph& g,
                                      std::int64_t node_budget = 50'000'000);

// All isolating cycles up to rotation/reflection, truncated at max_count.
std::vector<Cycle> enumerate_isolating_cycles(const EmbeddedGraph& g, int max_count);

// rotate so the least vertex is first, then the lexicographically smaller
// direction; used to deduplicate cycles
Cycle canonical_cycle(const Cycle& c);

}  // namespace longcycle
