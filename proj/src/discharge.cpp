#include "longcycle/discharge.hpp"

#include <algorithm>

namespace longcycle {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
  }
  return "?";
}

int theorem_bound(int n) { return (5 * (n + 2) + 7) / 8; }

namespace {
long long g_audit_count = 0;
}
long long discharge_audit_count() { return g_audit_count; }

namespace {

std::vector<int> shared_edges(const CycleContext& ctx, int f1, int f2) {
  std::vector<int> out;
  for (int eid = 0; eid < ctx.c(); ++eid) {
    auto [a, b] = ctx.edge_faces[eid];
    if ((a == f1 && b == f2) || (a == f2 && b == f1)) out.push_back(eid);
  }
  return out;
}

// distinct opposite faces of f, by face id
std::vector<int> opposite_faces(const CycleContext& ctx, int f) {
  std::vector<int> out;
  for (int eid : ctx.faces[f].c_edges) out.push_back(ctx.opposite(f, eid));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// middle C-edge of a minor 3-face: second of its three arc edges
int middle_c_edge(const CycleContext& ctx, const ContextFace& f) {
  require(f.cls == FaceClass::Minor && f.j == 3 && f.arc_start >= 0, ErrorKind::InternalError,
          "middle C-edge requested for a non minor 3-face");
  return (f.arc_start + 1) % ctx.c();
}

}  // namespace

DischargeReport run_discharging(const EmbeddedGraph& g, const CycleContext& ctx) {
  require(!ctx.v_minus.empty() && !ctx.v_plus.empty(), ErrorKind::EmptySide,
          "a side of the cycle is empty");
  require(extendable_edges(g, ctx.cycle).empty(), ErrorKind::ExtendableEdgePresent,
          "cycle has an extendable edge");

  int nf = static_cast<int>(ctx.faces.size());
  DischargeReport rep;
  rep.initial.resize(nf);
  for (int f = 0; f < nf; ++f) rep.initial[f].value = 3 * ctx.faces[f].j;

  auto is_minor = [&](int f) { return ctx.faces[f].cls == FaceClass::Minor; };
  auto add = [&](Rule r, int from, int to, int thirds, std::vector<int> via) {
    rep.transfers.push_back({r, from, to, Thirds{thirds}, std::move(via)});
  };

  // R1: every major face sends m_{f,f'} to each opposite minor face
  for (int f = 0; f < nf; ++f) {
    if (ctx.faces[f].cls != FaceClass::Major) continue;
    for (int f2 : opposite_faces(ctx, f)) {
      if (!is_minor(f2)) continue;
      auto via = shared_edges(ctx, f, f2);
      add(Rule::R1, f, f2, 3 * static_cast<int>(via.size()), via);
    }
  }
  // R2: every minor face sends (2/3) m_{f,f'} to each opposite minor 2-face
  for (int f = 0; f < nf; ++f) {
    if (!is_minor(f)) continue;
    for (int f2 : opposite_faces(ctx, f)) {
      if (!is_minor(f2) || ctx.faces[f2].j != 2) continue;
      auto via = shared_edges(ctx, f, f2);
      add(Rule::R2, f, f2, 2 * static_cast<int>(via.size()), via);
    }
  }
  // R3: every minor face sends 1 to each minor 3-face opposite across its
  // middle C-edge
  for (int f2 = 0; f2 < nf; ++f2) {
    if (!is_minor(f2) || ctx.faces[f2].j != 3) continue;
    int e = middle_c_edge(ctx, ctx.faces[f2]);
    int f = ctx.opposite(f2, e);
    if (is_minor(f)) add(Rule::R3, f, f2, 3, {e});
  }
  // R4: a minor 4-face f1 with an opposite minor j>=4 face f (m=2) and an
  // opposite minor 2- or 3-face f2 (m=2) receives 2/3 from f
  for (int f1 = 0; f1 < nf; ++f1) {
    if (!is_minor(f1) || ctx.faces[f1].j != 4) continue;
    std::vector<int> senders;
    int partner = -1;
    for (int f : opposite_faces(ctx, f1)) {
      if (!is_minor(f) || ctx.m_between(f1, f) != 2) continue;
      if (ctx.faces[f].j >= 4)
        senders.push_back(f);
      else if (ctx.faces[f].j == 2 || ctx.faces[f].j == 3)
        partner = f;
    }
    if (senders.empty() || partner < 0) continue;
    require(senders.size() == 1, ErrorKind::InternalError, "ambiguous R4 sender");
    add(Rule::R4, senders.front(), f1, 2, shared_edges(ctx, f1, senders.front()));
  }
  // R5: a minor 5-face f1 with an opposite minor j>=4 face f (m=2) and two
  // opposite minor 2-faces receives 1/3 from f
  for (int f1 = 0; f1 < nf; ++f1) {
    if (!is_minor(f1) || ctx.faces[f1].j != 5) continue;
    std::vector<int> senders;
    int two_faces = 0;
    for (int f : opposite_faces(ctx, f1)) {
      if (!is_minor(f)) continue;
      if (ctx.faces[f].j >= 4 && ctx.m_between(f1, f) == 2) senders.push_back(f);
      if (ctx.faces[f].j == 2) ++two_faces;
    }
    if (senders.empty() || two_faces < 2) continue;
    require(senders.size() == 1, ErrorKind::InternalError, "ambiguous R5 sender");
    add(Rule::R5, senders.front(), f1, 1, shared_edges(ctx, f1, senders.front()));
  }

  std::stable_sort(rep.transfers.begin(), rep.transfers.end(),
                   [](const Transfer& a, const Transfer& b) {
                     if (a.rule != b.rule) return a.rule < b.rule;
                     if (a.from_face != b.from_face) return a.from_face < b.from_face;
                     return a.to_face < b.to_face;
                   });

  rep.final_weights = rep.initial;
  for (const auto& t : rep.transfers) {
    rep.final_weights[t.from_face].value -= t.amount.value;
    rep.final_weights[t.to_face].value += t.amount.value;
  }
  long long total_init = 0, total_final = 0;
  for (int f = 0; f < nf; ++f) {
    total_init += rep.initial[f].value;
    total_final += rep.final_weights[f].value;
  }
  rep.conservation_ok = total_init == total_final && total_final == 6LL * ctx.c();
  require(rep.conservation_ok, ErrorKind::InternalError, "discharging does not conserve weight");
  ++g_audit_count;

  for (int f = 0; f < nf; ++f) {
    if (is_minor(f) && rep.final_weights[f].value < 10) rep.violations.push_back(f);
    if (ctx.faces[f].cls == FaceClass::Major)
      require(rep.final_weights[f].value >= 0, ErrorKind::InternalError,
              "major face with negative final weight");
  }

  int minor = ctx.minor_count();
  int off = static_cast<int>(ctx.v_minus.size() + ctx.v_plus.size());
  rep.lemma1_ok = minor >= off + 2;
  rep.inequality1_ok = rep.violations.empty() && 6 * ctx.c() >= 10 * minor;
  return rep;
}

bool check_inequality1(const DischargeReport& report, const CycleContext& ctx) {
  require(report.violations.empty(), ErrorKind::ViolationsPresent,
          "report has minor faces below 10/3");
  int n = ctx.h.vertex_count(), c = ctx.c();
  int minor = ctx.minor_count();
  int off = static_cast<int>(ctx.v_minus.size() + ctx.v_plus.size());
  require(off == n - c, ErrorKind::InternalError, "side sets must partition V minus V(C)");
  require(report.lemma1_ok && minor >= n - c + 2, ErrorKind::InternalError,
          "minor-face count below the counting lemma");
  require(6 * c >= 10 * minor, ErrorKind::InternalError, "2c >= (10/3)|M| fails");
  require(c >= theorem_bound(n), ErrorKind::InternalError,
          "certified cycle shorter than 5(n+2)/8");
  return true;
}

}  // namespace longcycle
