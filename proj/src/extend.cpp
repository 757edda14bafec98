#include "longcycle/extend.hpp"

#include <algorithm>
#include <set>

namespace longcycle {

namespace {

int find_subpath_start(const Cycle& c, const std::vector<int>& sub) {
  int len = c.length();
  for (int s = 0; s < len; ++s) {
    if (c.at(s) != sub.front()) continue;
    bool ok = true;
    for (size_t k = 1; k < sub.size(); ++k)
      if (c.at(s + static_cast<int>(k)) != sub[k]) {
        ok = false;
        break;
      }
    if (ok) return s;
  }
  return -1;
}

Cycle splice(const EmbeddedGraph& g, const Cycle& c, const ExtensionStep& step,
             bool need_isolating) {
  require(step.removed_subpath.size() >= 2, ErrorKind::InternalError, "step needs a subpath");
  std::vector<int> sub = step.removed_subpath;
  std::vector<int> rep = step.replacement_path;
  int start = find_subpath_start(c, sub);
  if (start < 0) {
    std::reverse(sub.begin(), sub.end());
    std::reverse(rep.begin(), rep.end());
    start = find_subpath_start(c, sub);
  }
  require(start >= 0, ErrorKind::InternalError, "removed subpath is not on the cycle");
  require(rep.front() == sub.front() && rep.back() == sub.back(), ErrorKind::InternalError,
          "replacement endpoints differ");
  require(rep.size() > sub.size(), ErrorKind::InternalError, "replacement not longer");

  Cycle out;
  out.vertices = rep;
  int len = c.length();
  for (int i = static_cast<int>(sub.size()); i < len; ++i)
    out.vertices.push_back(c.at(start + i));
  validate_cycle(g, out);
  require(out.length() > c.length(), ErrorKind::InternalError, "cycle did not grow");
  std::set<int> new_set(out.vertices.begin(), out.vertices.end());
  for (int v : c.vertices)
    require(new_set.count(v) != 0, ErrorKind::InternalError, "old cycle vertex dropped");
  if (need_isolating)
    require(is_isolating(g, out), ErrorKind::InternalError,
            "step broke the isolating property");
  return out;
}

// DFS over simple paths start..end inside the window plus adjacent off-cycle
// vertices; a hit is any strictly longer replacement that keeps the window's
// interior. `need_isolating` additionally requires the spliced cycle to stay
// isolating.
std::optional<ExtensionStep> window_rewrite(const EmbeddedGraph& g, const Cycle& c,
                                            int start, int len, bool need_isolating,
                                            std::int64_t& nodes, std::int64_t budget) {
  std::vector<char> on(g.vertex_count(), 0);
  for (int v : c.vertices) on[v] = 1;
  std::vector<int> window;
  for (int k = 0; k < len; ++k) window.push_back(c.at(start + k));
  int A = window.front(), B = window.back();
  std::set<int> interior(window.begin() + 1, window.end() - 1);
  std::set<int> allowed(window.begin(), window.end());
  for (int w : window)
    for (int u : g.neighbors(w))
      if (!on[u]) allowed.insert(u);

  std::vector<int> path{A};
  std::vector<char> used(g.vertex_count(), 0);
  used[A] = 1;
  std::optional<ExtensionStep> found;
  auto dfs = [&](auto&& self, int v) -> bool {
    if (++nodes > budget) return false;
    if (v == B) {
      if (path.size() <= window.size()) return false;
      for (int w : interior)
        if (!used[w]) return false;
      ExtensionStep step;
      step.case_id = "search";
      step.removed_subpath = window;
      step.replacement_path = path;
      for (int u : path)
        if (!interior.count(u) && u != A && u != B) step.absorbed.push_back(u);
      try {
        splice(g, c, step, need_isolating);
      } catch (const Error&) {
        return false;
      }
      found = step;
      return true;
    }
    for (int u : g.neighbors(v)) {
      if (!allowed.count(u)) continue;
      if (u == B) {
        if (v == A && path.size() == 1) continue;
        path.push_back(u);
        bool hit = self(self, u);
        path.pop_back();
        if (hit) return true;
        continue;
      }
      if (used[u]) continue;
      used[u] = 1;
      path.push_back(u);
      if (self(self, u)) return true;
      path.pop_back();
      used[u] = 0;
    }
    return false;
  };
  if (dfs(dfs, A)) return found;
  return std::nullopt;
}

// any strictly lengthening rewrite anywhere on the cycle (bootstrap moves)
std::optional<Cycle> any_growth_move(const EmbeddedGraph& g, const Cycle& c, int radius) {
  auto ext = extendable_edges(g, c);
  if (!ext.empty()) return extend_basic(g, c, ext.front().first, ext.front().second);
  std::int64_t nodes = 0;
  const std::int64_t budget = 2'000'000;
  for (int len = 3; len <= std::min(radius, c.length()); ++len)
    for (int start = 0; start < c.length(); ++start) {
      auto step = window_rewrite(g, c, start, len, false, nodes, budget);
      if (step) return splice(g, c, *step, false);
      if (nodes > budget) return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

Cycle apply_step(const EmbeddedGraph& g, const Cycle& c, const ExtensionStep& step) {
  return splice(g, c, step, true);
}

ExtensionStep basic_step(const Cycle& c, Edge e, int v) {
  ExtensionStep step;
  step.case_id = "basic";
  int len = c.length();
  for (int i = 0; i < len; ++i) {
    int x = c.at(i), y = c.at(i + 1);
    if (make_edge(x, y) == make_edge(e.first, e.second)) {
      step.removed_subpath = {x, y};
      step.replacement_path = {x, v, y};
      step.absorbed = {v};
      return step;
    }
  }
  fail(ErrorKind::NotExtendable, "edge is not on the cycle");
}

Cycle extend_basic(const EmbeddedGraph& g, const Cycle& c, Edge e, int v) {
  validate_cycle(g, c);
  require(g.has_edge(e.first, v) && g.has_edge(e.second, v), ErrorKind::NotExtendable,
          "vertex is not a common neighbor of the edge");
  for (int u : c.vertices)
    require(u != v, ErrorKind::NotExtendable, "common neighbor already on the cycle");
  auto step = basic_step(c, e, v);
  return splice(g, c, step, false);
}

std::optional<ExtensionStep> local_search_extension(const EmbeddedGraph& g,
                                                    const CycleContext& ctx, int face_id,
                                                    int radius, std::int64_t budget) {
  const ContextFace& f = ctx.faces[face_id];
  int c = ctx.c();
  int arc_len = f.cls == FaceClass::Minor ? f.j + 1 : 2;
  int anchor = f.cls == FaceClass::Minor ? f.arc_start
                                         : (f.c_edges.empty() ? 0 : f.c_edges.front());
  std::int64_t nodes = 0;
  for (int len = std::min(arc_len + 1, std::min(radius, c)); len <= std::min(radius, c);
       ++len) {
    for (int lead = 0; lead + arc_len <= len; ++lead) {
      int start = ((anchor - lead) % c + c) % c;
      auto step = window_rewrite(g, ctx.cycle, start, len, true, nodes, budget);
      if (step) {
        step->face = face_id;
        return step;
      }
      if (nodes > budget) return std::nullopt;
    }
  }
  return std::nullopt;
}

Cycle hamiltonian_small(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  require(n <= 10, ErrorKind::InternalError, "hamiltonian_small is for n <= 10");
  require(is_3_connected(g), ErrorKind::NotThreeConnected, "input is not 3-connected");
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), 0);
    for (int u : g.neighbors(path.back())) {
      if (used[u]) continue;
      used[u] = 1;
      path.push_back(u);
      if (self(self)) return true;
      path.pop_back();
      used[u] = 0;
    }
    return false;
  };
  require(dfs(dfs), ErrorKind::InternalError,
          "3-connected plane graph on <= 10 vertices must be Hamiltonian");
  Cycle c{path};
  validate_cycle(g, c);
  return c;
}

namespace {

std::optional<Cycle> exhaustive_isolating_cycle(const EmbeddedGraph& g, int min_len) {
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::optional<Cycle> best;
  std::int64_t nodes = 0;
  const std::int64_t budget = 80'000'000;
  auto dfs = [&](auto&& self, int v) -> bool {
    if (++nodes > budget) return false;
    path.push_back(v);
    used[v] = 1;
    if (static_cast<int>(path.size()) >= std::max(3, min_len) &&
        g.has_edge(v, path.front())) {
      Cycle c{path};
      if (is_isolating(g, c)) {
        best = c;
        used[v] = 0;
        path.pop_back();
        return true;
      }
    }
    for (int u : g.neighbors(v)) {
      if (used[u] || u < path.front()) continue;  // least cycle vertex goes first
      if (self(self, u)) {
        used[v] = 0;
        path.pop_back();
        return true;
      }
    }
    used[v] = 0;
    path.pop_back();
    return false;
  };
  for (int s = 0; s < n && !best; ++s) dfs(dfs, s);
  require(nodes <= budget, ErrorKind::SearchExhausted, "isolating-cycle backtracking budget");
  return best;
}

}  // namespace

Cycle initial_isolating_cycle(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  require(n >= 11, ErrorKind::InternalError, "bootstrap expects n >= 11");
  int best_face = 0;
  for (int i = 1; i < g.face_count(); ++i)
    if (g.faces()[i].length() > g.faces()[best_face].length()) best_face = i;
  Cycle c{g.faces()[best_face].walk};
  std::set<int> dedup(c.vertices.begin(), c.vertices.end());
  if (dedup.size() != c.vertices.size() || c.length() < 3) c = Cycle{g.faces()[0].walk};
  validate_cycle(g, c);
  for (int radius : {5, 9}) {
    while (true) {
      if (c.length() >= 8 && is_isolating(g, c)) return c;
      auto grown = any_growth_move(g, c, radius);
      if (!grown) break;
      c = *grown;
    }
  }
  if (c.length() >= 8 && is_isolating(g, c)) return c;
  if (n <= 24) {
    auto found = exhaustive_isolating_cycle(g, 8);
    require(found.has_value(), ErrorKind::InternalError,
            "no isolating cycle of length >= 8 found by exhaustive search");
    return *found;
  }
  fail(ErrorKind::SearchExhausted, "bootstrap stalled and n > 24");
}

Certificate long_cycle(const EmbeddedGraph& input, const LongCycleOptions& opt) {
  // Whitney: the embedding is unique up to reflection. The driver's greedy
  // choices depend on the orientation, so solve on a canonical one; the
  // result is a cycle of the same abstract graph either way.
  EmbeddedGraph flipped = input.mirrored();
  const EmbeddedGraph& g =
      flipped.rotations() < input.rotations() ? flipped : input;
  int n = g.vertex_count();
  if (!opt.assume_valid) {
    auto res = essential_4_connectivity(g);
    require(res.ok, ErrorKind::NotEssentially4Connected,
            "input has a non-trivial 3-separator");
  }
  Certificate cert;
  if (n <= 10) {
    cert.kind = "hamiltonian";
    cert.cycle = hamiltonian_small(g);
    require(cert.cycle.length() >= theorem_bound(n), ErrorKind::InternalError,
            "Hamiltonian cycle below bound");
    return cert;
  }

  Cycle c = initial_isolating_cycle(g);
  for (int iter = 0; iter <= n + 2; ++iter) {
    cert.iterations = iter;
    while (true) {
      auto ext = extendable_edges(g, c);
      if (ext.empty()) break;
      auto [e, v] = ext.front();
      cert.steps.push_back(basic_step(c, e, v));
      c = extend_basic(g, c, e, v);
      require(is_isolating(g, c), ErrorKind::InternalError,
              "basic extension broke the isolating property");
    }
    CycleContext ctx = build_context(g, c);
    if (ctx.v_minus.empty() || ctx.v_plus.empty()) {
      cert.kind = "side-empty";
      cert.cycle = c;
      break;
    }
    DischargeReport rep = run_discharging(g, ctx);
    if (rep.violations.empty()) {
      check_inequality1(rep, ctx);
      cert.kind = "discharging";
      cert.cycle = c;
      cert.report = std::move(rep);
      break;
    }
    int fid = rep.violations.front();  // least face id
    auto step = match_case(g, ctx, fid);
    if (!step) {
      step = local_search_extension(g, ctx, fid, opt.search_radius);
      require(step.has_value(), ErrorKind::InternalError,
              "violating face matched no recipe and no search rewrite exists");
      cert.fallback_used = true;
    } else if (opt.cross_check_steps) {
      auto alt = local_search_extension(g, ctx, fid, opt.search_radius);
      require(alt.has_value(), ErrorKind::InternalError,
              "catalog found a step but the bounded search found none");
    }
    cert.steps.push_back(*step);
    c = apply_step(g, c, *step);
  }
  require(!cert.kind.empty(), ErrorKind::InternalError, "driver exceeded its iteration bound");

  // A discharging fixpoint certifies the bound. A side-empty stop relies on a
  // cited lemma about longest isolating cycles while ours is only locally
  // maximal, so check the length and keep rewriting if it falls short.
  while (cert.cycle.length() < theorem_bound(n)) {
    auto grown = any_growth_move(g, cert.cycle, 11);
    require(grown.has_value(), ErrorKind::InternalError,
            "cycle below the certified bound and no rewrite found");
    cert.cycle = *grown;
    cert.fallback_used = true;
  }
  return cert;
}

}  // namespace longcycle
