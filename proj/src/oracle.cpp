#include "longcycle/oracle.hpp"

#include <algorithm>
#include <set>

namespace longcycle {

Cycle canonical_cycle(const Cycle& c) {
  int len = c.length();
  int least = 0;
  for (int i = 1; i < len; ++i)
    if (c.vertices[i] < c.vertices[least]) least = i;
  std::vector<int> fwd, bwd;
  for (int k = 0; k < len; ++k) fwd.push_back(c.at(least + k));
  for (int k = 0; k < len; ++k) bwd.push_back(c.at(least - k));
  return Cycle{std::min(fwd, bwd)};
}

OracleResult circumference_bruteforce(const EmbeddedGraph& g, std::int64_t node_budget) {
  int n = g.vertex_count();
  OracleResult res;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    if (++res.explored > node_budget)
      fail(ErrorKind::BudgetExceeded, "circumference search budget exhausted");
    path.push_back(v);
    used[v] = 1;
    if (static_cast<int>(path.size()) >= 3 && g.has_edge(v, path.front()) &&
        static_cast<int>(path.size()) > res.circumference) {
      res.circumference = static_cast<int>(path.size());
      res.witness = Cycle{path};
    }
    for (int u : g.neighbors(v)) {
      if (used[u] || u < path.front()) continue;  // cycles rooted at their least vertex
      self(self, u);
    }
    used[v] = 0;
    path.pop_back();
  };
  for (int s = 0; s < n; ++s) dfs(dfs, s);
  require(res.circumference >= 3, ErrorKind::InternalError, "graph has no cycle");
  validate_cycle(g, res.witness);
  return res;
}

std::vector<Cycle> enumerate_isolating_cycles(const EmbeddedGraph& g, int max_count) {
  int n = g.vertex_count();
  std::set<std::vector<int>> seen;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  bool full = false;
  auto dfs = [&](auto&& self, int v) -> void {
    if (full) return;
    path.push_back(v);
    used[v] = 1;
    if (static_cast<int>(path.size()) >= 3 && g.has_edge(v, path.front())) {
      Cycle c{path};
      if (is_isolating(g, c)) {
        Cycle canon = canonical_cycle(c);
        if (seen.insert(canon.vertices).second) {
          out.push_back(canon);
          if (static_cast<int>(out.size()) >= max_count) full = true;
        }
      }
    }
    for (int u : g.neighbors(v)) {
      if (full) break;
      if (used[u] || u < path.front()) continue;
      self(self, u);
    }
    used[v] = 0;
    path.pop_back();
  };
  for (int s = 0; s < n && !full; ++s) dfs(dfs, s);
  return out;
}

}  // namespace longcycle
