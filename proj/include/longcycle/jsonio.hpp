#pragma once

#include <string>

#include <json.hpp>

#include "longcycle/extend.hpp"

namespace longcycle {

nlohmann::json cycle_to_json(const Cycle& c);
nlohmann::json context_to_json(const CycleContext& ctx);
nlohmann::json report_to_json(const DischargeReport& rep);
nlohmann::json step_to_json(const ExtensionStep& s);
nlohmann::json certificate_to_json(const Certificate& cert);

struct RunSummary {
  std::string instance;
  int n = 0;
  int cycle_length = 0;
  int bound = 0;            // ceil(5(n+2)/8)
  double bound16 = 0;       // 5(n+4)/8 when n >= 16, else 0
  std::string certificate;  // kind
  int steps = 0;
  double wall_ms = 0;
};

nlohmann::json summary_to_json(const RunSummary& s);

}  // namespace longcycle
