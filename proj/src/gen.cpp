#include "longcycle/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace longcycle {

EmbeddedGraph from_faces(int n, const std::vector<std::vector<int>>& faces) {
  // succ[v][u] = w when some face runs u -> v -> w
  std::vector<std::map<int, int>> succ(n);
  for (const auto& f : faces) {
    int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
      require(u >= 0 && u < n && v >= 0 && v < n, ErrorKind::MalformedInput, "face id range");
      require(!succ[v].count(u), ErrorKind::MalformedInput,
              "directed edge on two faces; face list not an embedding");
      succ[v][u] = w;
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    int start = succ[v].begin()->first, u = start;
    do {
      rot[v].push_back(u);
      auto it = succ[v].find(u);
      require(it != succ[v].end(), ErrorKind::MalformedInput, "open rotation at a vertex");
      u = it->second;
    } while (u != start);
    require(rot[v].size() == succ[v].size(), ErrorKind::MalformedInput,
            "rotation at a vertex splits into several cycles");
  }
  return EmbeddedGraph::from_rotations(std::move(rot));
}

EmbeddedGraph bipyramid(int k) {
  require(k >= 3, ErrorKind::MalformedInput, "bipyramid needs k >= 3");
  auto rim = [&](int i) { return 2 + ((i % k) + k) % k; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < k; ++i) {
    faces.push_back({0, rim(i), rim(i + 1)});
    faces.push_back({1, rim(i + 1), rim(i)});
  }
  return from_faces(k + 2, faces);
}

EmbeddedGraph catalog_graph(const std::string& name) {
  if (name == "triangle") return from_faces(3, {{0, 1, 2}, {2, 1, 0}});
  if (name == "k4") return from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
  if (name == "path4")
    return EmbeddedGraph::from_rotations({{1}, {0, 2}, {1, 3}, {2}});
  if (name == "W5" || name == "W6") {
    int k = name == "W5" ? 5 : 6;
    std::vector<std::vector<int>> faces;
    auto rim = [&](int i) { return 1 + ((i % k) + k) % k; };
    for (int i = 0; i < k; ++i) faces.push_back({0, rim(i), rim(i + 1)});
    std::vector<int> outer;
    for (int i = k - 1; i >= 0; --i) outer.push_back(rim(i));
    faces.push_back(outer);
    return from_faces(k + 1, faces);
  }
  if (name == "cube")
    return from_faces(8, {{0, 1, 2, 3},
                          {4, 7, 6, 5},
                          {0, 4, 5, 1},
                          {1, 5, 6, 2},
                          {2, 6, 7, 3},
                          {3, 7, 4, 0}});
  if (name == "octahedron") return bipyramid(4);
  if (name == "icosahedron") {
    std::vector<std::vector<int>> faces;
    auto up = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto lo = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
      faces.push_back({0, up(i), up(i + 1)});
      faces.push_back({up(i + 1), up(i), lo(i)});
      faces.push_back({up(i + 1), lo(i), lo(i + 1)});
      faces.push_back({11, lo(i + 1), lo(i)});
    }
    return from_faces(12, faces);
  }
  if (name.rfind("bipyramid", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(name.substr(9));
    } catch (const std::exception&) {
      fail(ErrorKind::UnknownName, "bad bipyramid size in '" + name + "'");
    }
    return bipyramid(k);
  }
  fail(ErrorKind::UnknownName, "no catalog graph named '" + name + "'");
}

namespace {

EmbeddedGraph insert_into_faces(const EmbeddedGraph& base, const std::vector<int>& face_ids) {
  require(is_triangulation(base), ErrorKind::NotTriangulation,
          "insertion base must be a planar triangulation");
  std::set<int> chosen(face_ids.begin(), face_ids.end());
  for (int id : chosen)
    require(id >= 0 && id < base.face_count(), ErrorKind::MalformedInput, "face id range");
  int n = base.vertex_count();
  std::vector<std::vector<int>> faces;
  int next = n;
  for (int id = 0; id < base.face_count(); ++id) {
    const auto& w = base.faces()[id].walk;
    if (!chosen.count(id)) {
      faces.push_back(w);
      continue;
    }
    int t = next++;
    for (int i = 0; i < 3; ++i) faces.push_back({w[i], w[(i + 1) % 3], t});
  }
  EmbeddedGraph out = from_faces(next, faces);
  auto res = essential_4_connectivity(out);
  if (!res.ok) {
    std::ostringstream msg;
    msg << "inserted graph has a non-trivial 3-separator {";
    for (size_t i = 0; i < res.witness.vertices.size(); ++i)
      msg << (i ? "," : "") << res.witness.vertices[i];
    msg << "}";
    fail(ErrorKind::PostCheckFailed, msg.str());
  }
  return out;
}

}  // namespace

EmbeddedGraph kleetope(const EmbeddedGraph& base) {
  std::vector<int> all(base.face_count());
  for (int i = 0; i < base.face_count(); ++i) all[i] = i;
  return insert_into_faces(base, all);
}

EmbeddedGraph partial_kleetope(const EmbeddedGraph& base, const std::vector<int>& face_ids) {
  return insert_into_faces(base, face_ids);
}

std::string canonical_plane_code(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  std::string best;
  for (int mirror = 0; mirror < 2; ++mirror) {
    std::vector<std::vector<int>> rot = g.rotations();
    if (mirror)
      for (auto& r : rot) std::reverse(r.begin(), r.end());
    std::vector<std::vector<int>> idx(n);
    for (int v = 0; v < n; ++v) {
      idx[v].assign(n, -1);
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) idx[v][rot[v][i]] = i;
    }
    for (int u0 = 0; u0 < n; ++u0) {
      for (int v0 : rot[u0]) {
        std::vector<int> label(n, -1), order{u0}, anchor(n, -1);
        label[u0] = 0;
        anchor[u0] = v0;
        std::string code;
        for (size_t q = 0; q < order.size(); ++q) {
          int v = order[q];
          int deg = static_cast<int>(rot[v].size());
          int s = idx[v][anchor[v]];
          for (int k = 0; k < deg; ++k) {
            int u = rot[v][(s + k) % deg];
            if (label[u] < 0) {
              label[u] = static_cast<int>(order.size());
              order.push_back(u);
              anchor[u] = v;
            }
            code.push_back(static_cast<char>(label[u] + 1));
          }
          code.push_back('\0');
        }
        if (best.empty() || code < best) best = code;
      }
    }
  }
  return best;
}

std::vector<EmbeddedGraph> triangulations_of_order(int n) {
  require(n >= 4, ErrorKind::TooSmall, "triangulations need n >= 4");
  EmbeddedGraph seed = n == 4 ? catalog_graph("k4") : bipyramid(n - 2);
  std::map<std::string, EmbeddedGraph> seen;
  std::vector<EmbeddedGraph> queue{seed};
  seen.emplace(canonical_plane_code(seed), seed);
  while (!queue.empty()) {
    EmbeddedGraph g = queue.back();
    queue.pop_back();
    // flip every edge whose two triangles form a quad with a missing diagonal
    std::map<std::pair<int, int>, int> third;  // directed edge -> opposite vertex
    for (const auto& f : g.faces()) {
      const auto& w = f.walk;
      for (int i = 0; i < 3; ++i) third[{w[i], w[(i + 1) % 3]}] = w[(i + 2) % 3];
    }
    for (const auto& e : g.edges()) {
      int u = e.first, v = e.second;
      int p = third.at({u, v}), q = third.at({v, u});
      if (p == q || g.has_edge(p, q)) continue;
      std::vector<std::vector<int>> faces;
      for (const auto& f : g.faces()) {
        const auto& w = f.walk;
        bool is_uvp = false, is_vuq = false;
        for (int i = 0; i < 3; ++i) {
          if (w[i] == u && w[(i + 1) % 3] == v) is_uvp = true;
          if (w[i] == v && w[(i + 1) % 3] == u) is_vuq = true;
        }
        if (!is_uvp && !is_vuq) faces.push_back(w);
      }
      faces.push_back({u, q, p});
      faces.push_back({v, p, q});
      EmbeddedGraph flipped = from_faces(g.vertex_count(), faces);
      auto code = canonical_plane_code(flipped);
      if (!seen.count(code)) {
        seen.emplace(code, flipped);
        queue.push_back(flipped);
      }
    }
  }
  std::vector<EmbeddedGraph> out;
  for (auto& [code, g] : seen) out.push_back(g);
  return out;
}

std::vector<EmbeddedGraph> ingest_filtered(const std::string& bytes, IngestFilter filter,
                                           IngestSummary* summary) {
  auto graphs = parse_planar_code(bytes);
  std::vector<EmbeddedGraph> out;
  for (auto& g : graphs) {
    bool keep = false;
    switch (filter) {
      case IngestFilter::EssentiallyFourConnected:
        keep = g.vertex_count() >= 4 && is_3_connected(g) && essential_4_connectivity(g).ok;
        break;
      case IngestFilter::ThreeConnected:
        keep = g.vertex_count() >= 4 && is_3_connected(g);
        break;
      case IngestFilter::FourConnectedTriangulation:
        keep = is_triangulation(g) && is_4_connected(g);
        break;
    }
    if (keep) out.push_back(std::move(g));
  }
  if (summary) {
    summary->total = static_cast<int>(graphs.size());
    summary->kept = static_cast<int>(out.size());
  }
  return out;
}

std::vector<EmbeddedGraph> small_3connected_corpus(int min_count) {
  std::vector<EmbeddedGraph> out;
  std::set<std::string> seen;
  auto push = [&](const EmbeddedGraph& g) {
    auto code = canonical_plane_code(g);
    if (seen.insert(code).second) out.push_back(g);
  };
  for (int n = 4; n <= 10; ++n)
    for (const auto& g : triangulations_of_order(n)) push(g);
  // 3-connected non-triangulations: validated edge deletions, two rounds
  std::vector<EmbeddedGraph> frontier = out;
  for (int round = 0; round < 2 && static_cast<int>(out.size()) < min_count; ++round) {
    std::vector<EmbeddedGraph> next;
    for (const auto& g : frontier) {
      if (static_cast<int>(out.size()) >= min_count) break;
      for (const auto& e : g.edges()) {
        EmbeddedGraph h = g.without_edges({e});
        bool tri_ok = h.vertex_count() >= 4;
        if (!tri_ok) continue;
        bool three = false;
        try {
          three = is_3_connected(h);
        } catch (const Error&) {
          three = false;
        }
        if (!three) continue;
        auto code = canonical_plane_code(h);
        if (seen.insert(code).second) {
          out.push_back(h);
          next.push_back(h);
          if (static_cast<int>(out.size()) >= min_count) break;
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<EmbeddedGraph> e4c_corpus(int min_count, unsigned seed) {
  std::vector<EmbeddedGraph> out;
  auto admit = [&](const EmbeddedGraph& g) {
    if (g.vertex_count() < 11 || g.vertex_count() > 32) return;
    out.push_back(g);
  };
  std::vector<EmbeddedGraph> bases;
  for (int n = 6; n <= 10; ++n)
    for (const auto& t : triangulations_of_order(n))
      if (is_4_connected(t)) bases.push_back(t);
  bases.push_back(catalog_graph("icosahedron"));
  for (const auto& b : bases)
    if (3 * b.vertex_count() - 4 <= 32) admit(kleetope(b));
  for (int k = 9; k <= 30; ++k) admit(bipyramid(k));  // 4-connected, vacuously ok

  std::mt19937 rng(seed);
  int guard = 0;
  while (static_cast<int>(out.size()) < min_count && guard++ < 20000) {
    const EmbeddedGraph& b = bases[rng() % bases.size()];
    int max_insert = std::min(32 - b.vertex_count(), b.face_count());
    int lo = std::max(1, 11 - b.vertex_count());
    if (max_insert < lo) continue;
    int cnt = lo + static_cast<int>(rng() % (max_insert - lo + 1));
    std::vector<int> ids(b.face_count());
    for (int i = 0; i < b.face_count(); ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(cnt);
    try {
      admit(partial_kleetope(b, ids));
    } catch (const Error&) {
      // the mandatory post-check rejected this subset
    }
  }
  require(static_cast<int>(out.size()) >= min_count, ErrorKind::SearchExhausted,
          "could not assemble the requested corpus size");
  return out;
}

}  // namespace longcycle
