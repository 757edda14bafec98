#include "longcycle/jsonio.hpp"

namespace longcycle {

using nlohmann::json;

json cycle_to_json(const Cycle& c) { return json(c.vertices); }

json context_to_json(const CycleContext& ctx) {
  json faces = json::array();
  for (const auto& f : ctx.faces) {
    json jf{{"id", f.id},
            {"side", side_name(f.side)},
            {"class", face_class_name(f.cls)},
            {"j", f.j},
            {"c_edges", f.c_edges}};
    if (f.cls == FaceClass::Minor) jf["lone_vertex"] = f.lone_vertex;
    faces.push_back(std::move(jf));
  }
  json ms = json::array();
  for (const auto& [pair, count] : ctx.m)
    ms.push_back({{"f1", pair.first}, {"f2", pair.second}, {"m", count}});
  return json{{"cycle", cycle_to_json(ctx.cycle)},
              {"v_minus", ctx.v_minus},
              {"v_plus", ctx.v_plus},
              {"faces", std::move(faces)},
              {"m", std::move(ms)}};
}

json report_to_json(const DischargeReport& rep) {
  json transfers = json::array();
  for (const auto& t : rep.transfers)
    transfers.push_back({{"rule", rule_name(t.rule)},
                         {"from", t.from_face},
                         {"to", t.to_face},
                         {"thirds", t.amount.value},
                         {"via_edges", t.via_edges}});
  json initial = json::array(), final_w = json::array();
  for (const auto& t : rep.initial) initial.push_back(t.value);
  for (const auto& t : rep.final_weights) final_w.push_back(t.value);
  return json{{"initial_thirds", std::move(initial)},
              {"transfers", std::move(transfers)},
              {"final_thirds", std::move(final_w)},
              {"violations", rep.violations},
              {"conservation_ok", rep.conservation_ok},
              {"lemma1_ok", rep.lemma1_ok},
              {"inequality1_ok", rep.inequality1_ok}};
}

json step_to_json(const ExtensionStep& s) {
  return json{{"case", s.case_id},
              {"removed_subpath", s.removed_subpath},
              {"replacement_path", s.replacement_path},
              {"absorbed", s.absorbed}};
}

json certificate_to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back(step_to_json(s));
  json out{{"kind", cert.kind},
           {"cycle", cycle_to_json(cert.cycle)},
           {"steps", std::move(steps)},
           {"fallback_used", cert.fallback_used}};
  if (cert.report) out["report"] = report_to_json(*cert.report);
  return out;
}

json summary_to_json(const RunSummary& s) {
  json out{{"instance", s.instance}, {"n", s.n},
           {"cycle_length", s.cycle_length}, {"bound", s.bound},
           {"certificate", s.certificate}, {"steps", s.steps},
           {"wall_ms", s.wall_ms}};
  if (s.bound16 > 0) out["bound16"] = s.bound16;
  return out;
}

}  // namespace longcycle
