#include "longcycle/cycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace longcycle {

const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::Minor: return "minor";
    case FaceClass::Major: return "major";
    case FaceClass::CycleBounded: return "cycle-bounded";
  }
  return "?";
}

const char* side_name(Side s) { return s == Side::Inside ? "inside" : "outside"; }

void validate_cycle(const EmbeddedGraph& g, const Cycle& c) {
  int len = c.length();
  require(len >= 3, ErrorKind::NotACycle, "cycle needs at least 3 vertices");
  std::set<int> seen;
  for (int v : c.vertices) {
    require(v >= 0 && v < g.vertex_count(), ErrorKind::NotACycle, "vertex out of range");
    require(seen.insert(v).second, ErrorKind::NotACycle, "repeated vertex " + std::to_string(v));
  }
  for (int i = 0; i < len; ++i)
    require(g.has_edge(c.at(i), c.at(i + 1)), ErrorKind::NotACycle,
            "missing edge " + std::to_string(c.at(i)) + "-" + std::to_string(c.at(i + 1)));
}

bool is_isolating(const EmbeddedGraph& g, const Cycle& c) {
  validate_cycle(g, c);
  std::vector<char> on(g.vertex_count(), 0);
  for (int v : c.vertices) on[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on[v]) continue;
    if (g.degree(v) != 3) return false;
    for (int u : g.neighbors(v))
      if (!on[u]) return false;  // off-cycle neighbor: component bigger than one vertex
  }
  return true;
}

std::vector<std::pair<Edge, int>> extendable_edges(const EmbeddedGraph& g, const Cycle& c) {
  validate_cycle(g, c);
  std::vector<char> on(g.vertex_count(), 0);
  for (int v : c.vertices) on[v] = 1;
  std::vector<std::pair<Edge, int>> out;
  for (int i = 0; i < c.length(); ++i) {
    int x = c.at(i), y = c.at(i + 1);
    int best = -1;
    for (int v : g.neighbors(x)) {
      if (on[v] || !g.has_edge(v, y)) continue;
      if (best < 0 || v < best) best = v;
    }
    if (best >= 0) out.push_back({{x, y}, best});
  }
  return out;
}

std::string to_cycle_text(const Cycle& c) {
  std::ostringstream out;
  out << "cycle:";
  for (int v : c.vertices) out << " " << v;
  return out.str();
}

Cycle parse_cycle_text(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  in >> tag;
  require(tag == "cycle:", ErrorKind::MalformedInput, "expected 'cycle:' prefix");
  Cycle c;
  int v;
  while (in >> v) c.vertices.push_back(v);
  return c;
}

int CycleContext::cycle_edge_id(int u, int v) const {
  int pu = pos_on_cycle[u], pv = pos_on_cycle[v];
  if (pu < 0 || pv < 0) return -1;
  int n = c();
  if ((pu + 1) % n == pv) return pu;
  if ((pv + 1) % n == pu) return pv;
  return -1;
}

int CycleContext::opposite(int face_id, int c_edge_id) const {
  const auto& pair = edge_faces[c_edge_id];
  require(pair[0] == face_id || pair[1] == face_id, ErrorKind::InternalError,
          "face is not incident with that C-edge");
  return pair[0] == face_id ? pair[1] : pair[0];
}

int CycleContext::m_between(int f1, int f2) const {
  auto it = m.find({std::min(f1, f2), std::max(f1, f2)});
  return it == m.end() ? 0 : it->second;
}

int CycleContext::minor_count() const {
  int k = 0;
  for (const auto& f : faces)
    if (f.cls == FaceClass::Minor) ++k;
  return k;
}

CycleContext build_context(const EmbeddedGraph& g, const Cycle& cyc) {
  validate_cycle(g, cyc);
  CycleContext ctx;
  ctx.cycle = cyc;
  int n = g.vertex_count(), c = cyc.length();
  ctx.pos_on_cycle.assign(n, -1);
  for (int i = 0; i < c; ++i) ctx.pos_on_cycle[cyc.vertices[i]] = i;

  std::set<Edge> cycle_edges;
  for (int i = 0; i < c; ++i) cycle_edges.insert(make_edge(cyc.at(i), cyc.at(i + 1)));
  for (const auto& e : g.edges())
    if (ctx.pos_on_cycle[e.first] >= 0 && ctx.pos_on_cycle[e.second] >= 0 && !cycle_edges.count(e))
      ctx.chords.push_back(e);
  ctx.h = g.without_edges(ctx.chords);

  // Identify faces of h, their C-edges, and which side of C each face lies on.
  // The face whose walk contains the forward directed edge (c[i], c[i+1]) is
  // labeled Inside; crossing a non-C edge never changes sides, so the label
  // spreads over the dual graph restricted to non-C edges.
  const auto& faces = ctx.h.faces();
  int nf = static_cast<int>(faces.size());
  ctx.edge_faces.assign(c, {-1, -1});
  std::vector<std::vector<int>> face_cedges(nf);
  std::map<std::pair<int, int>, int> dir_face;  // directed edge -> face id
  for (int fid = 0; fid < nf; ++fid) {
    const auto& w = faces[fid].walk;
    int len = faces[fid].length();
    for (int i = 0; i < len; ++i) {
      int u = w[i], v = w[(i + 1) % len];
      dir_face[{u, v}] = fid;
      int eid = ctx.cycle_edge_id(u, v);
      if (eid >= 0) {
        face_cedges[fid].push_back(eid);
        if (ctx.edge_faces[eid][0] < 0)
          ctx.edge_faces[eid][0] = fid;
        else {
          require(ctx.edge_faces[eid][1] < 0, ErrorKind::InternalError,
                  "cycle edge incident with more than two faces");
          ctx.edge_faces[eid][1] = fid;
        }
      }
    }
  }
  for (int eid = 0; eid < c; ++eid)
    require(ctx.edge_faces[eid][0] >= 0 && ctx.edge_faces[eid][1] >= 0 &&
                ctx.edge_faces[eid][0] != ctx.edge_faces[eid][1],
            ErrorKind::InternalError, "cycle edge must lie on exactly two distinct faces");

  std::vector<int> side(nf, -1);  // 0 inside, 1 outside
  for (int i = 0; i < c; ++i) {
    int u = cyc.at(i), v = cyc.at(i + 1);
    int fin = dir_face.at({u, v}), fout = dir_face.at({v, u});
    require(side[fin] != 1 && side[fout] != 0, ErrorKind::InternalError,
            "face lies on both sides of the cycle");
    side[fin] = 0;
    side[fout] = 1;
  }
  // spread across non-C edges
  {
    std::vector<int> stack;
    for (int f = 0; f < nf; ++f)
      if (side[f] >= 0) stack.push_back(f);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      const auto& w = faces[f].walk;
      int len = faces[f].length();
      for (int i = 0; i < len; ++i) {
        int u = w[i], v = w[(i + 1) % len];
        if (ctx.cycle_edge_id(u, v) >= 0) continue;
        int f2 = dir_face.at({v, u});
        if (side[f2] < 0) {
          side[f2] = side[f];
          stack.push_back(f2);
        } else {
          require(side[f2] == side[f], ErrorKind::InternalError, "inconsistent face sides");
        }
      }
    }
  }

  // vertex sides
  std::vector<int> vside(n, -1);
  for (int fid = 0; fid < nf; ++fid)
    for (int v : faces[fid].walk) {
      if (ctx.pos_on_cycle[v] >= 0) continue;
      if (vside[v] < 0)
        vside[v] = side[fid];
      else
        require(vside[v] == side[fid], ErrorKind::InternalError,
                "off-cycle vertex incident with both sides");
    }
  for (int v = 0; v < n; ++v) {
    if (ctx.pos_on_cycle[v] >= 0) continue;
    require(vside[v] >= 0, ErrorKind::InternalError, "off-cycle vertex with no face");
    (vside[v] == 0 ? ctx.v_minus : ctx.v_plus).push_back(v);
  }

  ctx.faces.resize(nf);
  for (int fid = 0; fid < nf; ++fid) {
    ContextFace& cf = ctx.faces[fid];
    cf.id = fid;
    cf.side = side[fid] == 0 ? Side::Inside : Side::Outside;
    cf.walk = faces[fid].walk;
    cf.c_edges = face_cedges[fid];
    std::sort(cf.c_edges.begin(), cf.c_edges.end());
    cf.j = static_cast<int>(cf.c_edges.size());
    std::set<int> off;
    for (int v : cf.walk)
      if (ctx.pos_on_cycle[v] < 0) off.insert(v);
    if (off.empty()) {
      cf.cls = FaceClass::CycleBounded;
      bool empty_side = (side[fid] == 0 ? ctx.v_minus : ctx.v_plus).empty();
      require(empty_side, ErrorKind::InternalError,
              "cycle-bounded face although its side is nonempty");
    } else if (off.size() == 1) {
      cf.cls = FaceClass::Minor;
      cf.lone_vertex = *off.begin();
    } else {
      cf.cls = FaceClass::Major;
    }
    // minor faces: C-edges form one contiguous arc along the cycle (the lone
    // vertex closes a fan over it)
    if (cf.cls == FaceClass::Minor) {
      require(cf.j >= 1, ErrorKind::InternalError, "minor face without C-edges");
      std::set<int> ids(cf.c_edges.begin(), cf.c_edges.end());
      int start = -1;
      for (int e : ids)
        if (!ids.count(((e - 1) % c + c) % c)) {
          require(start < 0, ErrorKind::InternalError, "minor face C-edges not one arc");
          start = e;
        }
      require(start >= 0 || static_cast<int>(ids.size()) == c, ErrorKind::InternalError,
              "minor face C-edge arc has no start");
      if (start < 0) start = 0;
      for (int k = 0; k < cf.j; ++k)
        require(ids.count((start + k) % c) != 0, ErrorKind::InternalError,
                "minor face C-edges not contiguous");
      cf.arc_start = start;
      require(ctx.h.has_edge(cf.lone_vertex, cyc.at(start)) &&
                  ctx.h.has_edge(cf.lone_vertex, cyc.at(start + cf.j)),
              ErrorKind::InternalError, "minor face lone vertex not attached to arc ends");
    }
  }

  // shared C-edge counts
  for (int eid = 0; eid < c; ++eid) {
    auto [f1, f2] = ctx.edge_faces[eid];
    ctx.m[{std::min(f1, f2), std::max(f1, f2)}]++;
  }

  // sum of j over all faces is 2c
  int total_j = 0;
  for (const auto& f : ctx.faces) total_j += f.j;
  require(total_j == 2 * c, ErrorKind::InternalError, "sum of j over faces must be 2c");
  return ctx;
}

}  // namespace longcycle
