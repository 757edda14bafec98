#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "longcycle/extend.hpp"
#include "longcycle/gen.hpp"
#include "longcycle/jsonio.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/svg.hpp"

namespace lc = longcycle;
using nlohmann::json;

namespace {

int exit_code_for(lc::ErrorKind k) {
  switch (k) {
    case lc::ErrorKind::MalformedInput:
    case lc::ErrorKind::AsymmetricAdjacency:
    case lc::ErrorKind::EulerViolation:
    case lc::ErrorKind::Disconnected:
    case lc::ErrorKind::BadHeader:
    case lc::ErrorKind::TruncatedRecord:
    case lc::ErrorKind::UnknownName:
      return 2;
    case lc::ErrorKind::BudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) lc::fail(lc::ErrorKind::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// both input formats, sniffed by header
std::vector<lc::EmbeddedGraph> load_graphs(const std::string& path) {
  std::string bytes = read_file(path);
  if (bytes.rfind(lc::planar_code_header(), 0) == 0) return lc::parse_planar_code(bytes);
  return {lc::parse_rotation_text(bytes)};
}

std::int64_t default_budget() {
  if (const char* env = std::getenv("LONGCYCLE_BUDGET")) return std::atoll(env);
  return 50'000'000;
}

int cmd_validate(const std::string& path) {
  auto graphs = load_graphs(path);
  int rc = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    std::cout << path << "[" << i << "]: n=" << g.vertex_count() << " e=" << g.edge_count()
              << " f=" << g.face_count() << " embedding ok\n";
    bool three = g.vertex_count() >= 4 && lc::is_3_connected(g);
    std::cout << "  3-connected: " << (three ? "yes" : "no") << "\n";
    if (!three) {
      rc = 1;
      continue;
    }
    auto res = lc::essential_4_connectivity(g);
    if (res.ok) {
      std::cout << "  essentially 4-connected: yes\n";
    } else {
      rc = 1;
      std::cout << "  essentially 4-connected: no; witness separator {";
      for (size_t k = 0; k < res.witness.vertices.size(); ++k)
        std::cout << (k ? "," : "") << res.witness.vertices[k];
      std::cout << "} components";
      for (const auto& comp : res.witness.components_after_removal)
        std::cout << " |" << comp.size() << "|";
      std::cout << "\n";
    }
  }
  return rc;
}

int find_one(const lc::EmbeddedGraph& g, const std::string& name, bool audit, bool as_json,
             const std::string& svg_path) {
  auto t0 = std::chrono::steady_clock::now();
  lc::Certificate cert = lc::long_cycle(g);
  auto t1 = std::chrono::steady_clock::now();

  lc::RunSummary s;
  s.instance = name;
  s.n = g.vertex_count();
  s.cycle_length = cert.cycle.length();
  s.bound = lc::theorem_bound(s.n);
  s.bound16 = s.n >= 16 ? 5.0 * (s.n + 4) / 8.0 : 0;
  s.certificate = cert.kind;
  s.steps = static_cast<int>(cert.steps.size());
  s.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (as_json) {
    json out = lc::summary_to_json(s);
    if (audit) out["certificate_detail"] = lc::certificate_to_json(cert);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << name << ": n=" << s.n << " length=" << s.cycle_length << " bound=" << s.bound
              << " certificate=" << s.certificate << " steps=" << s.steps << " ("
              << s.wall_ms << " ms)\n";
    std::cout << lc::to_cycle_text(cert.cycle) << "\n";
    if (audit) std::cout << lc::certificate_to_json(cert).dump(2) << "\n";
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary);
    out << lc::render_svg(g, &cert.cycle);
  }
  return 0;
}

int cmd_find(const std::string& path, const std::string& all_dir, bool audit, bool as_json,
             const std::string& svg_path) {
  if (!all_dir.empty()) {
    int rc = 0;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(all_dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto graphs = load_graphs(f.string());
      for (size_t i = 0; i < graphs.size(); ++i)
        rc |= find_one(graphs[i], f.filename().string() + "[" + std::to_string(i) + "]",
                       audit, as_json, "");
    }
    return rc;
  }
  auto graphs = load_graphs(path);
  int rc = 0;
  for (size_t i = 0; i < graphs.size(); ++i)
    rc |= find_one(graphs[i], path + "[" + std::to_string(i) + "]", audit, as_json,
                   graphs.size() == 1 ? svg_path : "");
  return rc;
}

int cmd_oracle(const std::string& path, std::int64_t budget) {
  auto graphs = load_graphs(path);
  for (const auto& g : graphs) {
    auto res = lc::circumference_bruteforce(g, budget);
    json out{{"circumference", res.circumference},
             {"witness", lc::cycle_to_json(res.witness)},
             {"explored", res.explored}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_audit(const std::string& path, const std::string& cycle_arg) {
  auto graphs = load_graphs(path);
  const auto& g = graphs.front();
  lc::Cycle cyc;
  if (!cycle_arg.empty()) {
    cyc = cycle_arg.rfind("cycle:", 0) == 0 ? lc::parse_cycle_text(cycle_arg)
                                            : lc::parse_cycle_text("cycle: " + cycle_arg);
  } else {
    cyc = lc::long_cycle(g).cycle;
  }
  auto ctx = lc::build_context(g, cyc);
  json out{{"context", lc::context_to_json(ctx)}};
  if (!ctx.v_minus.empty() && !ctx.v_plus.empty() && lc::extendable_edges(g, cyc).empty())
    out["report"] = lc::report_to_json(lc::run_discharging(g, ctx));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_gen(const std::string& catalog_name, const std::string& kleetope_base,
            const std::string& ingest_path, const std::string& filter, int corpus_small,
            int corpus_e4c, unsigned seed, const std::string& out_path, bool as_planar_code) {
  std::vector<lc::EmbeddedGraph> gs;
  std::string note;
  if (!catalog_name.empty()) {
    gs.push_back(lc::catalog_graph(catalog_name));
    note = catalog_name;
  } else if (!kleetope_base.empty()) {
    gs.push_back(lc::kleetope(lc::catalog_graph(kleetope_base)));
    note = "kleetope of " + kleetope_base;
  } else if (!ingest_path.empty()) {
    lc::IngestFilter f = lc::IngestFilter::EssentiallyFourConnected;
    if (filter == "e4c")
      f = lc::IngestFilter::EssentiallyFourConnected;
    else if (filter == "3c")
      f = lc::IngestFilter::ThreeConnected;
    else if (filter == "4ct")
      f = lc::IngestFilter::FourConnectedTriangulation;
    else
      lc::fail(lc::ErrorKind::MalformedInput, "filter must be e4c, 3c or 4ct");
    lc::IngestSummary sum;
    gs = lc::ingest_filtered(read_file(ingest_path), f, &sum);
    std::cerr << ingest_path << ": kept " << sum.kept << " of " << sum.total << "\n";
    as_planar_code = true;  // filtered planar_code echo
  } else if (corpus_small > 0) {
    gs = lc::small_3connected_corpus(corpus_small);
    as_planar_code = true;
  } else if (corpus_e4c > 0) {
    gs = lc::e4c_corpus(corpus_e4c, seed);
    as_planar_code = true;
  } else {
    lc::fail(lc::ErrorKind::MalformedInput, "nothing to generate");
  }

  std::string payload;
  if (as_planar_code || gs.size() > 1)
    payload = lc::to_planar_code(gs);
  else
    payload = lc::to_rotation_text(gs.front(), note);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << payload;
    std::cerr << "wrote " << gs.size() << " graph(s) to " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"long cycles in essentially 4-connected plane graphs"};
  app.require_subcommand(1);

  std::string path, all_dir, svg_path, cycle_arg;
  bool audit = false, as_json = false, as_pc = false;
  std::int64_t budget = default_budget();

  auto* validate = app.add_subcommand("validate", "check embedding and connectivity");
  validate->add_option("file", path)->required();

  auto* find = app.add_subcommand("find", "find a long cycle with certificate");
  find->add_option("file", path);
  find->add_option("--all", all_dir, "run every file in a directory");
  find->add_flag("--audit", audit, "emit the certificate JSON");
  find->add_flag("--json", as_json, "machine readable summary");
  find->add_option("--svg", svg_path, "write a drawing with the cycle highlighted");

  auto* oracle = app.add_subcommand("oracle", "exact circumference by backtracking");
  oracle->add_option("file", path)->required();
  oracle->add_option("--budget", budget, "search node budget");

  auto* auditc = app.add_subcommand("audit", "context and discharging report as JSON");
  auditc->add_option("file", path)->required();
  auditc->add_option("--cycle", cycle_arg, "audit this cycle instead of running the solver");

  std::string catalog_name, kleetope_base, ingest_path, filter = "e4c", out_path;
  int corpus_small = 0, corpus_e4c = 0;
  unsigned seed = 20240429;
  auto* gen = app.add_subcommand("gen", "emit instances");
  gen->add_option("--catalog", catalog_name, "fixed fixture by name");
  gen->add_option("--kleetope", kleetope_base, "kleetope of a catalog triangulation");
  gen->add_option("--ingest", ingest_path, "filter a planar_code file");
  gen->add_option("--filter", filter, "e4c | 3c | 4ct");
  gen->add_option("--corpus-small", corpus_small, "3-connected corpus with n <= 10");
  gen->add_option("--corpus-e4c", corpus_e4c, "essentially 4-connected corpus, 11 <= n <= 32");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->add_flag("--planar-code", as_pc, "write planar_code instead of rotation text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (find->parsed()) return cmd_find(path, all_dir, audit, as_json, svg_path);
    if (oracle->parsed()) return cmd_oracle(path, budget);
    if (auditc->parsed()) return cmd_audit(path, cycle_arg);
    if (gen->parsed())
      return cmd_gen(catalog_name, kleetope_base, ingest_path, filter, corpus_small,
                     corpus_e4c, seed, out_path, as_pc);
  } catch (const lc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.kind());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
