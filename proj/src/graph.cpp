#include "longcycle/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace longcycle {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::NotEssentially4Connected: return "NotEssentially4Connected";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotExtendable: return "NotExtendable";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::ExtendableEdgePresent: return "ExtendableEdgePresent";
    case ErrorKind::ViolationsPresent: return "ViolationsPresent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotTriangulation: return "NotTriangulation";
    case ErrorKind::PostCheckFailed: return "PostCheckFailed";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

EmbeddedGraph EmbeddedGraph::from_rotations(std::vector<std::vector<int>> rotations) {
  EmbeddedGraph g;
  g.rot_ = std::move(rotations);
  g.build_derived();
  return g;
}

void EmbeddedGraph::build_derived() {
  n_ = static_cast<int>(rot_.size());
  require(n_ >= 1, ErrorKind::MalformedInput, "empty graph");
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  edges_.clear();
  for (int v = 0; v < n_; ++v) {
    for (int u : rot_[v]) {
      require(u >= 0 && u < n_, ErrorKind::MalformedInput,
              "neighbor id out of range at vertex " + std::to_string(v));
      require(u != v, ErrorKind::MalformedInput, "loop at vertex " + std::to_string(v));
      require(!adj_[static_cast<size_t>(v) * n_ + u], ErrorKind::MalformedInput,
              "parallel edge " + std::to_string(v) + "-" + std::to_string(u));
      adj_[static_cast<size_t>(v) * n_ + u] = 1;
    }
  }
  for (int v = 0; v < n_; ++v)
    for (int u : rot_[v]) {
      require(adj_[static_cast<size_t>(u) * n_ + v] != 0, ErrorKind::AsymmetricAdjacency,
              "edge " + std::to_string(v) + "-" + std::to_string(u) + " listed only once");
      if (v < u) edges_.push_back({v, u});
    }
  e_ = static_cast<int>(edges_.size());
  require(is_connected(*this), ErrorKind::Disconnected, "graph is not connected");

  // Face traversal: the edge after arriving at v from u continues to the
  // rotation successor of u around v. Start each face from the least unused
  // directed edge so face ids are deterministic.
  std::vector<std::vector<int>> pos(n_);
  for (int v = 0; v < n_; ++v) {
    pos[v].assign(n_, -1);
    for (int i = 0; i < degree(v); ++i) pos[v][rot_[v][i]] = i;
  }
  std::map<std::pair<int, int>, char> used;
  for (int v = 0; v < n_; ++v)
    for (int u : rot_[v]) used[{v, u}] = 0;
  faces_.clear();
  for (auto& [start, flag] : used) {
    if (flag) continue;
    Face f;
    int u = start.first, v = start.second;
    while (true) {
      auto& seen = used[{u, v}];
      require(!seen, ErrorKind::EulerViolation, "directed edge visited twice in face traversal");
      seen = 1;
      f.walk.push_back(u);
      int i = pos[v][u];
      int w = rot_[v][(i + 1) % degree(v)];
      u = v;
      v = w;
      if (u == start.first && v == start.second) break;
    }
    faces_.push_back(std::move(f));
  }
  int euler = n_ - e_ + face_count();
  require(euler == 2, ErrorKind::EulerViolation,
          "n - e + f = " + std::to_string(euler) + ", not a sphere embedding");
}

EmbeddedGraph EmbeddedGraph::mirrored() const {
  auto rot = rot_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return from_rotations(std::move(rot));
}

EmbeddedGraph EmbeddedGraph::without_edges(const std::vector<Edge>& removed) const {
  std::set<Edge> gone(removed.begin(), removed.end());
  auto rot = rot_;
  for (int v = 0; v < n_; ++v) {
    std::vector<int> keep;
    for (int u : rot[v])
      if (!gone.count(make_edge(u, v))) keep.push_back(u);
    rot[v] = std::move(keep);
  }
  return from_rotations(std::move(rot));
}

EmbeddedGraph parse_rotation_text(const std::string& input) {
  std::istringstream in(input);
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> rot;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      require(tok == "n", ErrorKind::MalformedInput, "expected 'n <count>' header");
      require(static_cast<bool>(ls >> n) && n >= 1, ErrorKind::MalformedInput, "bad vertex count");
      rot.assign(n, {});
      seen.assign(n, 0);
      continue;
    }
    require(!tok.empty() && tok.back() == ':', ErrorKind::MalformedInput,
            "expected '<v>:' at line start, got '" + tok + "'");
    int v;
    try {
      v = std::stoi(tok.substr(0, tok.size() - 1));
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad vertex id '" + tok + "'");
    }
    require(v >= 0 && v < n, ErrorKind::MalformedInput, "vertex id out of range");
    require(!seen[v], ErrorKind::MalformedInput, "duplicate rotation line for vertex " + std::to_string(v));
    seen[v] = 1;
    int u;
    while (ls >> u) rot[v].push_back(u);
    require(ls.eof(), ErrorKind::MalformedInput, "trailing junk on rotation line");
  }
  require(n >= 1, ErrorKind::MalformedInput, "missing 'n <count>' header");
  return EmbeddedGraph::from_rotations(std::move(rot));
}

std::string to_rotation_text(const EmbeddedGraph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "n " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    for (int u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
  return out.str();
}

std::string planar_code_header() { return ">>planar_code<<"; }

std::vector<EmbeddedGraph> parse_planar_code(const std::string& bytes) {
  const std::string header = planar_code_header();
  require(bytes.size() >= header.size() && bytes.compare(0, header.size(), header) == 0,
          ErrorKind::BadHeader, "missing >>planar_code<< header");
  size_t i = header.size();
  std::vector<EmbeddedGraph> out;
  while (i < bytes.size()) {
    int n = static_cast<unsigned char>(bytes[i++]);
    require(n >= 1, ErrorKind::TruncatedRecord, "zero vertex count");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        require(i < bytes.size(), ErrorKind::TruncatedRecord, "record ends mid vertex list");
        int b = static_cast<unsigned char>(bytes[i++]);
        if (b == 0) break;
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(EmbeddedGraph::from_rotations(std::move(rot)));
  }
  return out;
}

std::string to_planar_code(const std::vector<EmbeddedGraph>& gs) {
  std::string out = planar_code_header();
  for (const auto& g : gs) {
    require(g.vertex_count() <= 255, ErrorKind::MalformedInput, "planar_code n<=255 variant");
    out.push_back(static_cast<char>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int u : g.neighbors(v)) out.push_back(static_cast<char>(u + 1));
      out.push_back('\0');
    }
  }
  return out;
}

std::vector<std::vector<int>> components_after_removal(const EmbeddedGraph& g,
                                                       const std::vector<int>& removed) {
  int n = g.vertex_count();
  std::vector<char> gone(n, 0), vis(n, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || vis[s]) continue;
    std::vector<int> comp, stack{s};
    vis[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!gone[u] && !vis[u]) {
          vis[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++cnt;
    for (int u : g.neighbors(v))
      if (!vis[u]) {
        vis[u] = 1;
        stack.push_back(u);
      }
  }
  return cnt == n;
}

namespace {

// Articulation points of g minus the vertex set `gone` (Tarjan lowpoint DFS,
// iterative). Returns also whether the remaining graph is connected.
struct CutInfo {
  std::vector<int> cuts;
  bool connected = true;
  int remaining = 0;
};

CutInfo articulation_points(const EmbeddedGraph& g, const std::vector<char>& gone) {
  int n = g.vertex_count();
  CutInfo info;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0, roots = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) ++info.remaining;
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (!gone[v]) start = v;
  if (start < 0) return info;

  for (int s = start; s < n; ++s) {
    if (gone[s] || disc[s] >= 0) continue;
    ++roots;
    // iterative dfs with explicit edge indices
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g.neighbors(v).size()) {
        int u = g.neighbors(v)[i++];
        if (gone[u] || u == parent[v]) continue;
        if (disc[u] >= 0) {
          low[v] = std::min(low[v], disc[u]);
        } else {
          parent[u] = v;
          ++child_count[v];
          disc[u] = low[u] = timer++;
          stack.push_back({u, 0});
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (parent[p] != -1 && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (child_count[s] >= 2) is_cut[s] = 1;
  }
  info.connected = roots == 1;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) info.cuts.push_back(v);
  return info;
}

}  // namespace

bool is_3_connected(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  require(n >= 4, ErrorKind::TooSmall, "3-connectivity needs n >= 4");
  std::vector<char> gone(n, 0);
  {
    auto info = articulation_points(g, gone);
    if (!info.connected || !info.cuts.empty()) return false;
  }
  for (int v = 0; v < n; ++v) {
    gone.assign(n, 0);
    gone[v] = 1;
    auto info = articulation_points(g, gone);
    if (!info.connected || !info.cuts.empty()) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> all_3_separators(const EmbeddedGraph& g) {
  int n = g.vertex_count();
  std::set<std::array<int, 3>> seps;
  std::vector<char> gone(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      gone.assign(n, 0);
      gone[u] = gone[v] = 1;
      auto info = articulation_points(g, gone);
      for (int w : info.cuts) {
        std::array<int, 3> s{u, v, w};
        std::sort(s.begin(), s.end());
        seps.insert(s);
      }
    }
  }
  return {seps.begin(), seps.end()};
}

bool is_4_connected(const EmbeddedGraph& g) {
  if (g.vertex_count() < 5 || !is_3_connected(g)) return false;
  return all_3_separators(g).empty();
}

bool is_triangulation(const EmbeddedGraph& g) {
  if (g.vertex_count() < 4) return false;
  for (const auto& f : g.faces())
    if (f.length() != 3) return false;
  return true;
}

E4CResult essential_4_connectivity(const EmbeddedGraph& g) {
  require(is_3_connected(g), ErrorKind::NotThreeConnected, "input is not 3-connected");
  E4CResult res;
  for (const auto& s : all_3_separators(g)) {
    auto comps = components_after_removal(g, {s[0], s[1], s[2]});
    require(comps.size() == 2, ErrorKind::InternalError,
            "3-separator of a 3-connected plane graph must leave exactly two components");
    bool trivial = false;
    for (const auto& c : comps)
      if (c.size() == 1) trivial = true;
    if (!trivial) {
      res.ok = false;
      res.witness.vertices = {s[0], s[1], s[2]};
      res.witness.components_after_removal = comps;
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace longcycle
