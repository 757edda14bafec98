#include "longcycle/svg.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace longcycle {

std::string render_svg(const EmbeddedGraph& g, const Cycle* highlight, int size_px) {
  int n = g.vertex_count();
  std::vector<double> x(n, 0), y(n, 0);
  std::vector<char> fixed(n, 0);
  const auto& outer = g.faces().front().walk;
  int k = static_cast<int>(outer.size());
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < k; ++i) {
    double ang = 2 * pi * i / k;
    x[outer[i]] = std::cos(ang);
    y[outer[i]] = std::sin(ang);
    fixed[outer[i]] = 1;
  }
  for (int it = 0; it < 3000; ++it) {  // Gauss-Seidel relaxation of the Tutte system
    double delta = 0;
    for (int v = 0; v < n; ++v) {
      if (fixed[v] || g.degree(v) == 0) continue;
      double sx = 0, sy = 0;
      for (int u : g.neighbors(v)) {
        sx += x[u];
        sy += y[u];
      }
      sx /= g.degree(v);
      sy /= g.degree(v);
      delta += std::abs(sx - x[v]) + std::abs(sy - y[v]);
      x[v] = sx;
      y[v] = sy;
    }
    if (delta < 1e-9) break;
  }
  double pad = 0.08 * size_px, span = size_px - 2 * pad;
  auto px = [&](double c) { return pad + (c + 1) / 2 * span; };

  std::set<Edge> cyc;
  if (highlight)
    for (int i = 0; i < highlight->length(); ++i)
      cyc.insert(make_edge(highlight->at(i), highlight->at(i + 1)));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
      << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
  for (const auto& e : g.edges()) {
    bool hl = cyc.count(e) > 0;
    out << "  <line x1=\"" << px(x[e.first]) << "\" y1=\"" << px(y[e.first]) << "\" x2=\""
        << px(x[e.second]) << "\" y2=\"" << px(y[e.second]) << "\" stroke=\""
        << (hl ? "#d62728" : "#999") << "\" stroke-width=\"" << (hl ? 3.0 : 1.0)
        << "\"" << (hl ? " class=\"cycle-edge\"" : "") << "/>\n";
  }
  for (int v = 0; v < n; ++v) {
    out << "  <circle cx=\"" << px(x[v]) << "\" cy=\"" << px(y[v])
        << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    out << "  <text x=\"" << px(x[v]) + 6 << "\" y=\"" << px(y[v]) - 6
        << "\" font-size=\"11\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace longcycle
