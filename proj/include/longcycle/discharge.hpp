#pragma once

#include <string>
#include <vector>

#include "longcycle/cycle.hpp"

namespace longcycle {

// exact weight as an integer count of thirds; 10/3 is value 10
struct Thirds {
  int value = 0;
};

enum class Rule { R1, R2, R3, R4, R5 };
const char* rule_name(Rule r);

struct Transfer {
  Rule rule;
  int from_face;
  int to_face;
  Thirds amount;
  std::vector<int> via_edges;  // shared C-edge ids the rule acted through
};

struct DischargeReport {
  std::vector<Thirds> initial;  // indexed by face id, 3j per j-face
  std::vector<Transfer> transfers;
  std::vector<Thirds> final_weights;
  std::vector<int> violations;  // minor faces with final < 10 thirds
  bool conservation_ok = false;
  bool lemma1_ok = false;
  bool inequality1_ok = false;
};

// Applies R1..R5 exactly once; premises are evaluated on the pre-discharge
// context. Requires both sides of the cycle nonempty and no extendable edge.
DischargeReport run_discharging(const EmbeddedGraph& g, const CycleContext& ctx);

// Requires a violation-free report; asserts the counting chain
// |M| >= n - c + 2 and 6c >= 10|M| (thirds), hence c >= 5(n+2)/8.
bool check_inequality1(const DischargeReport& report, const CycleContext& ctx);

// smallest cycle length the counting argument certifies: ceil(5(n+2)/8)
int theorem_bound(int n);

// process-wide count of discharging audits; every audit hard-checks the
// conservation identity, so a completed run certifies all of them
long long discharge_audit_count();

}  // namespace longcycle
