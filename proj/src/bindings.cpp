#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "longcycle/extend.hpp"
#include "longcycle/gen.hpp"
#include "longcycle/jsonio.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/svg.hpp"

namespace py = pybind11;
namespace lc = longcycle;

namespace {

lc::Cycle as_cycle(const std::vector<int>& vs) { return lc::Cycle{vs}; }

py::dict certificate_dict(const lc::Certificate& cert) {
  py::dict out;
  out["kind"] = cert.kind;
  out["cycle"] = cert.cycle.vertices;
  out["steps"] = static_cast<int>(cert.steps.size());
  out["fallback_used"] = cert.fallback_used;
  out["json"] = lc::certificate_to_json(cert).dump();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "long cycles in essentially 4-connected plane graphs";

  py::class_<lc::EmbeddedGraph>(m, "EmbeddedGraph")
      .def_static("from_rotations", &lc::EmbeddedGraph::from_rotations)
      .def_property_readonly("n", &lc::EmbeddedGraph::vertex_count)
      .def_property_readonly("edge_count", &lc::EmbeddedGraph::edge_count)
      .def_property_readonly("face_count", &lc::EmbeddedGraph::face_count)
      .def("rotations", &lc::EmbeddedGraph::rotations)
      .def("has_edge", &lc::EmbeddedGraph::has_edge)
      .def("mirrored", &lc::EmbeddedGraph::mirrored)
      .def("__repr__", [](const lc::EmbeddedGraph& g) {
        return "<EmbeddedGraph n=" + std::to_string(g.vertex_count()) +
               " e=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_rotation_text", &lc::parse_rotation_text);
  m.def("to_rotation_text", &lc::to_rotation_text, py::arg("g"), py::arg("comment") = "");
  m.def("parse_planar_code",
        [](py::bytes b) { return lc::parse_planar_code(std::string(b)); });
  m.def("to_planar_code",
        [](const std::vector<lc::EmbeddedGraph>& gs) { return py::bytes(lc::to_planar_code(gs)); });

  m.def("catalog", &lc::catalog_graph);
  m.def("kleetope", &lc::kleetope);
  m.def("bipyramid", &lc::bipyramid);

  m.def("is_3_connected", &lc::is_3_connected);
  m.def("essentially_4_connected", [](const lc::EmbeddedGraph& g) {
    auto res = lc::essential_4_connectivity(g);
    return py::make_tuple(res.ok, res.witness.vertices);
  });

  m.def("is_isolating",
        [](const lc::EmbeddedGraph& g, const std::vector<int>& c) {
          return lc::is_isolating(g, as_cycle(c));
        });
  m.def("extendable_edges", [](const lc::EmbeddedGraph& g, const std::vector<int>& c) {
    std::vector<std::tuple<int, int, int>> out;
    for (auto& [e, v] : lc::extendable_edges(g, as_cycle(c)))
      out.push_back({e.first, e.second, v});
    return out;
  });

  m.def("theorem_bound", &lc::theorem_bound);
  m.def(
      "long_cycle",
      [](const lc::EmbeddedGraph& g, bool assume_valid, bool cross_check) {
        lc::LongCycleOptions opt;
        opt.assume_valid = assume_valid;
        opt.cross_check_steps = cross_check;
        return certificate_dict(lc::long_cycle(g, opt));
      },
      py::arg("g"), py::arg("assume_valid") = false, py::arg("cross_check") = false);

  m.def(
      "circumference",
      [](const lc::EmbeddedGraph& g, std::int64_t budget) {
        auto res = lc::circumference_bruteforce(g, budget);
        return py::make_tuple(res.circumference, res.witness.vertices);
      },
      py::arg("g"), py::arg("budget") = 50'000'000);
  m.def("enumerate_isolating_cycles",
        [](const lc::EmbeddedGraph& g, int max_count) {
          std::vector<std::vector<int>> out;
          for (auto& c : lc::enumerate_isolating_cycles(g, max_count))
            out.push_back(c.vertices);
          return out;
        });

  m.def("render_svg", [](const lc::EmbeddedGraph& g, const std::vector<int>& cycle) {
    if (cycle.empty()) return lc::render_svg(g);
    lc::Cycle c{cycle};
    return lc::render_svg(g, &c);
  });

  py::register_exception<lc::Error>(m, "LongCycleError");
}
