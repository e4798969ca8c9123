#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critgraph/coloring.hpp"
#include "critgraph/discharge.hpp"
#include "critgraph/extension.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/json_io.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"
#include "critgraph/structure.hpp"

namespace py = pybind11;
using namespace critgraph;

namespace {

Graph graph_from_arg(const std::string& graph6) { return graph6_decode(graph6); }

std::optional<PotentialParams> params_for(int k) {
  if (k == 6) return PotentialParams::for_k6();
  return std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_critgraph, m) {
  m.doc() = "exact machinery for k-critical graphs: construction, potentials, "
            "structure detectors, and the discharging engine";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("graph_from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return graph6_encode(Graph::from_edges(n, edges));
  }, py::arg("n"), py::arg("edges"),
     "build a graph and return its graph6 encoding");

  m.def("graph_to_edges", [](const std::string& g6) {
    Graph g = graph_from_arg(g6);
    return std::make_pair(g.vertex_count(), g.edges());
  }, py::arg("graph6"), "decode graph6 into (n, edge list)");

  m.def("graph_to_json", [](const std::string& g6) {
    return graph_to_json(graph_from_arg(g6));
  }, py::arg("graph6"), "adjacency-list JSON export");

  m.def("complete_graph", [](int n) { return graph6_encode(Graph::complete(n)); },
        py::arg("n"));

  m.def("is_colorable", [](const std::string& g6, int colors) {
    return is_colorable(graph_from_arg(g6), colors);
  }, py::arg("graph6"), py::arg("colors"));

  m.def("chromatic_number", [](const std::string& g6) {
    return chromatic_number(graph_from_arg(g6));
  }, py::arg("graph6"));

  m.def("is_critical", [](const std::string& g6, int k) {
    return is_critical(graph_from_arg(g6), k);
  }, py::arg("graph6"), py::arg("k"));

  m.def("is_f_choosable", [](const std::string& g6, const std::vector<int>& f) {
    return is_f_choosable(graph_from_arg(g6), f);
  }, py::arg("graph6"), py::arg("f"));

  m.def("generate_k_ore", [](int k, int ops, std::uint64_t seed) {
    auto gen = generate_k_ore(k, ops, seed);
    return std::make_pair(graph6_encode(gen.graph), gen.trace.to_json());
  }, py::arg("k"), py::arg("ops"), py::arg("seed"),
     "returns (graph6, trace json)");

  m.def("recognize_k_ore", [](const std::string& g6, int k) -> py::object {
    auto rec = recognize_k_ore(graph_from_arg(g6), k);
    if (rec.status == OreStatus::kKOre) return py::str(rec.trace->to_json());
    if (rec.status == OreStatus::kNotKOre) return py::none();
    return py::str("budget-exhausted");
  }, py::arg("graph6"), py::arg("k"),
     "trace json when k-Ore, None when not, 'budget-exhausted' otherwise");

  m.def("ky_potential", [](const std::string& g6, int k) {
    return to_fraction_string(ky_potential(graph_from_arg(g6), k));
  }, py::arg("graph6"), py::arg("k"));

  m.def("potential", [](const std::string& g6, int k) {
    auto params = params_for(k);
    if (!params) throw InputError("default parameters exist only for k = 6");
    return to_fraction_string(eps_delta_potential(graph_from_arg(g6), *params));
  }, py::arg("graph6"), py::arg("k") = 6);

  m.def("clique_family_weight", [](const std::string& g6, int k) {
    return clique_family_weight(graph_from_arg(g6), k).value;
  }, py::arg("graph6"), py::arg("k"));

  m.def("density_report", [](const std::string& g6, int k) {
    return density_report_to_json(
        check_density_theorems(graph_from_arg(g6), k, params_for(k)));
  }, py::arg("graph6"), py::arg("k") = 6);

  m.def("find_gems", [](const std::string& g6, int k) {
    std::vector<std::pair<std::string, std::vector<int>>> out;
    for (const auto& gem : find_gems(graph_from_arg(g6), k))
      out.emplace_back(gem.kind == Gem::Kind::kDiamond ? "diamond" : "emerald",
                       gem.vertices.to_vector());
    return out;
  }, py::arg("graph6"), py::arg("k"));

  m.def("find_clusters", [](const std::string& g6, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& c : find_clusters(graph_from_arg(g6), k)) out.push_back(c.to_vector());
    return out;
  }, py::arg("graph6"), py::arg("k"));

  m.def("structure_report", [](const std::string& g6, int k) {
    return structure_report_to_json(graph_from_arg(g6), k, params_for(k), {}, {});
  }, py::arg("graph6"), py::arg("k") = 6);

  m.def("run_discharge", [](const std::string& g6, const std::string& epsilon) {
    Graph g = graph_from_arg(g6);
    DischargeParams params;
    if (!epsilon.empty()) params.epsilon = parse_rational(epsilon);
    auto hooks = DischargeHooks::from_structure(g, {});
    return run_discharge(g, params, hooks).to_json(g);
  }, py::arg("graph6"), py::arg("epsilon") = "",
     "full ledger JSON for the six-stage engine (k = 6)");
}
