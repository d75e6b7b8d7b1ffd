#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wre/attack.hpp"
#include "wre/centrality.hpp"
#include "wre/error.hpp"
#include "wre/filter.hpp"
#include "wre/generators.hpp"
#include "wre/mda.hpp"
#include "wre/rationality.hpp"

namespace py = pybind11;
using namespace wre;

namespace {

Metric metric_from(const std::string& name) {
  if (auto m = parse_metric(name)) return *m;
  throw py::value_error("unknown metric: " + name);
}

std::vector<Metric> metrics_from(const std::vector<std::string>& names) {
  std::vector<Metric> out;
  for (const auto& n : names) out.push_back(metric_from(n));
  return out;
}

std::vector<std::string> names(std::span<const Metric> metrics) {
  std::vector<std::string> out;
  for (Metric m : metrics) out.emplace_back(to_string(m));
  return out;
}

MatchRule match_from(const std::string& s) {
  if (s == "value") return MatchRule::SameValue;
  if (s == "position") return MatchRule::SamePosition;
  throw py::value_error("match must be 'value' or 'position'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Worst-case robustness of networks under node attacks";
  py::register_exception<Error>(m, "WreError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("mean_degree", &Graph::mean_degree)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", [](const Graph& g) { return std::vector<Edge>(g.edges().begin(), g.edges().end()); })
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             if (v >= g.node_count()) throw py::index_error("node out of range");
             return std::vector<NodeId>(g.neighbors(v).begin(), g.neighbors(v).end());
           })
      .def("save", [](const Graph& g, const std::string& path) { write_edge_list_file(path, g); })
      .def_static("load", &load_edge_list_file, py::arg("path"))
      .def_static("parse", [](const std::string& text) { return load_edge_list(text); }, py::arg("text"))
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& model, std::size_t n, unsigned k, std::uint64_t seed, double rewire) {
        GeneratorConfig c;
        const auto parsed = parse_model(model);
        if (!parsed) throw py::value_error("unknown model: " + model);
        c.model = *parsed;
        c.n = n;
        c.mean_degree = k;
        c.seed = seed;
        c.ws_rewire_prob = rewire;
        return generate(c);
      },
      py::arg("model"), py::arg("n"), py::arg("k"), py::arg("seed") = 0, py::arg("rewire") = 0.1);

  m.def("standard_metrics", [] { return names(standard_metrics()); });
  m.def("extended_metrics", [] { return names(extended_metrics()); });
  m.def(
      "centrality",
      [](const Graph& g, const std::string& metric) { return compute_centrality(g, metric_from(metric)).values; },
      py::arg("graph"), py::arg("metric"));

  py::class_<AttackCurve>(m, "AttackCurve")
      .def_readonly("strategy", &AttackCurve::strategy)
      .def_readonly("order", &AttackCurve::order)
      .def_readonly("gcc_sizes", &AttackCurve::gcc_sizes)
      .def_property_readonly("relative", &AttackCurve::relative_values)
      .def("__len__", &AttackCurve::node_count);

  m.def(
      "simulate_removal",
      [](const Graph& g, const std::vector<NodeId>& order) { return simulate_removal(g, order); },
      py::arg("graph"), py::arg("order"));
  m.def(
      "attack",
      [](const Graph& g, const std::string& metric, bool shuffle_ties, std::uint64_t seed) {
        return attack_by_strategy(g, metric_from(metric), {},
                                  shuffle_ties ? TieRule::SeededShuffle : TieRule::AscendingId, seed);
      },
      py::arg("graph"), py::arg("metric"), py::arg("shuffle_ties") = false, py::arg("seed") = 0);
  m.def(
      "attack_all",
      [](const Graph& g, std::optional<std::vector<std::string>> metrics) {
        const auto ms = metrics ? metrics_from(*metrics) : std::vector<Metric>(standard_metrics().begin(),
                                                                                standard_metrics().end());
        return attack_all(g, ms);
      },
      py::arg("graph"), py::arg("metrics") = py::none());

  py::class_<MdaCurve>(m, "MdaCurve")
      .def_readonly("source_strategies", &MdaCurve::source_strategies)
      .def_property_readonly("gcc_sizes", &MdaCurve::gcc_sizes)
      .def_property_readonly("relative", &MdaCurve::relative_values)
      .def_property_readonly("worst_robustness", [](const MdaCurve& c) { return worst_robustness(c); })
      .def("destruction", &destruction, py::arg("g0"))
      .def("decompose", &decompose)
      .def("__len__", &MdaCurve::node_count);

  m.def(
      "stack", [](const std::vector<AttackCurve>& curves) { return stack(curves); }, py::arg("curves"));

  py::class_<MrReport>(m, "MrReport")
      .def_readonly("counters", &MrReport::counters)
      .def_readonly("assignment", &MrReport::assignment)
      .def_readonly("u0", &MrReport::u0)
      .def_readonly("mr", &MrReport::mr)
      .def_readonly("iterations", &MrReport::iterations);

  m.def(
      "maximum_rationality",
      [](const std::vector<AttackCurve>& curves, const std::string& match) {
        return maximum_rationality(curves, match_from(match));
      },
      py::arg("curves"), py::arg("match") = "value");

  m.def(
      "apply_filter", [](const std::vector<double>& v) { return apply_filter(v); }, py::arg("values"));
}
