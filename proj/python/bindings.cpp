#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sbaplace/bench.hpp"
#include "sbaplace/exact.hpp"
#include "sbaplace/instances.hpp"
#include "sbaplace/metaheuristics.hpp"
#include "sbaplace/model.hpp"

namespace py = pybind11;
using namespace sbaplace;

namespace {

Placement placement_from_bits(const std::vector<int>& bits) {
  std::vector<std::uint8_t> raw;
  raw.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidInput("placement bits must be 0 or 1");
    raw.push_back(static_cast<std::uint8_t>(b));
  }
  return Placement(std::move(raw));
}

std::vector<int> placement_bits(const Placement& p) {
  return std::vector<int>(p.bits.begin(), p.bits.end());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hybrid-cloud service placement: cost model, exact and heuristic "
            "solvers, instance generation";

  py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLargeError",
                                           PyExc_ValueError);
  py::register_exception<InfeasibleInstance>(m, "InfeasibleInstanceError",
                                             PyExc_ValueError);

  py::class_<ServiceNode>(m, "ServiceNode")
      .def(py::init<int, double>(), py::arg("id"), py::arg("hosting"))
      .def_readonly("id", &ServiceNode::id)
      .def_readonly("hosting", &ServiceNode::hosting)
      .def("__repr__", [](const ServiceNode& n) {
        return "ServiceNode(id=" + std::to_string(n.id) +
               ", hosting=" + std::to_string(n.hosting) + ")";
      });

  py::class_<CommEdge>(m, "CommEdge")
      .def(py::init<int, int, double>(), py::arg("a"), py::arg("b"),
           py::arg("rate"))
      .def_readonly("a", &CommEdge::a)
      .def_readonly("b", &CommEdge::b)
      .def_readonly("rate", &CommEdge::rate)
      .def("__repr__", [](const CommEdge& e) {
        return "CommEdge(" + std::to_string(e.a) + ", " + std::to_string(e.b) +
               ", rate=" + std::to_string(e.rate) + ")";
      });

  py::class_<SbaGraph>(m, "SbaGraph")
      .def(py::init([](const std::vector<double>& hosting,
                       const std::vector<std::tuple<int, int, double>>& edges) {
             std::vector<CommEdge> es;
             es.reserve(edges.size());
             for (const auto& [a, b, rate] : edges) es.push_back({a, b, rate});
             return SbaGraph::from_hosting(hosting, std::move(es));
           }),
           py::arg("hosting"), py::arg("edges"),
           "Build a graph from per-node hosting quantities and "
           "(a, b, rate) edge tuples")
      .def_property_readonly("node_count", &SbaGraph::node_count)
      .def_property_readonly("edge_count", &SbaGraph::edge_count)
      .def_property_readonly(
          "nodes", [](const SbaGraph& g) { return g.nodes(); })
      .def_property_readonly(
          "edges", [](const SbaGraph& g) { return g.edges(); })
      .def("hosting", &SbaGraph::hosting, py::arg("id"))
      .def("__eq__", [](const SbaGraph& a, const SbaGraph& b) { return a == b; })
      .def("__repr__", [](const SbaGraph& g) {
        return "SbaGraph(" + std::to_string(g.node_count()) + " nodes, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  py::class_<Placement>(m, "Placement")
      .def(py::init(&placement_from_bits), py::arg("bits"))
      .def_static("all_private", &Placement::all_private, py::arg("n"))
      .def_static("all_public", &Placement::all_public, py::arg("n"))
      .def_property_readonly("bits", &placement_bits)
      .def("__len__", &Placement::size)
      .def("__eq__",
           [](const Placement& a, const Placement& b) { return a == b; })
      .def("__repr__",
           [](const Placement& p) { return "Placement('" + p.to_string() + "')"; });
  py::implicitly_convertible<py::list, Placement>();

  py::class_<CostParams>(m, "CostParams")
      .def(py::init<double, double, double, double>(), py::arg("alpha"),
           py::arg("beta1"), py::arg("beta2"), py::arg("hq") = 0.0)
      .def_readwrite("alpha", &CostParams::alpha)
      .def_readwrite("beta1", &CostParams::beta1)
      .def_readwrite("beta2", &CostParams::beta2)
      .def_readwrite("hq", &CostParams::hq)
      .def("__repr__", [](const CostParams& p) {
        return "CostParams(alpha=" + std::to_string(p.alpha) +
               ", beta1=" + std::to_string(p.beta1) +
               ", beta2=" + std::to_string(p.beta2) +
               ", hq=" + std::to_string(p.hq) + ")";
      });

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("hosting", &CostBreakdown::hosting)
      .def_readonly("public_comm", &CostBreakdown::public_comm)
      .def_readonly("hybrid_comm", &CostBreakdown::hybrid_comm)
      .def_readonly("total", &CostBreakdown::total)
      .def("__repr__", [](const CostBreakdown& b) {
        return "CostBreakdown(hosting=" + std::to_string(b.hosting) +
               ", public_comm=" + std::to_string(b.public_comm) +
               ", hybrid_comm=" + std::to_string(b.hybrid_comm) +
               ", total=" + std::to_string(b.total) + ")";
      });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("placement", &SolveResult::placement)
      .def_readonly("breakdown", &SolveResult::breakdown)
      .def_readonly("feasible", &SolveResult::feasible)
      .def_readonly("evaluations", &SolveResult::evaluations)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("wall_time", &SolveResult::wall_time)
      .def_readonly("solver_name", &SolveResult::solver_name)
      .def("__repr__", [](const SolveResult& r) {
        return "SolveResult(solver='" + r.solver_name +
               "', total=" + std::to_string(r.breakdown.total) +
               ", feasible=" + (r.feasible ? std::string("True") : "False") + ")";
      });

  py::enum_<ConstraintMode>(m, "ConstraintMode")
      .value("repair", ConstraintMode::repair)
      .value("penalty", ConstraintMode::penalty);

  py::class_<BpsoConfig>(m, "BpsoConfig")
      .def(py::init<>())
      .def_readwrite("swarm_size", &BpsoConfig::swarm_size)
      .def_readwrite("max_iters", &BpsoConfig::max_iters)
      .def_readwrite("w_start", &BpsoConfig::w_start)
      .def_readwrite("w_end", &BpsoConfig::w_end)
      .def_readwrite("c1", &BpsoConfig::c1)
      .def_readwrite("c2", &BpsoConfig::c2)
      .def_readwrite("v_max", &BpsoConfig::v_max)
      .def_readwrite("stagnation_limit", &BpsoConfig::stagnation_limit)
      .def_readwrite("seed", &BpsoConfig::seed)
      .def_readwrite("constraint", &BpsoConfig::constraint)
      .def_readwrite("penalty_factor", &BpsoConfig::penalty_factor);

  py::class_<GaConfig>(m, "GaConfig")
      .def(py::init<>())
      .def_readwrite("population", &GaConfig::population)
      .def_readwrite("generations", &GaConfig::generations)
      .def_readwrite("crossover_rate", &GaConfig::crossover_rate)
      .def_readwrite("mutation_rate", &GaConfig::mutation_rate)
      .def_readwrite("tournament_size", &GaConfig::tournament_size)
      .def_readwrite("elitism", &GaConfig::elitism)
      .def_readwrite("seed", &GaConfig::seed)
      .def_readwrite("constraint", &GaConfig::constraint)
      .def_readwrite("penalty_factor", &GaConfig::penalty_factor);

  py::class_<InstanceSpec>(m, "InstanceSpec")
      .def(py::init<>())
      .def_readwrite("name", &InstanceSpec::name)
      .def_readwrite("nodes", &InstanceSpec::nodes)
      .def_readwrite("edges", &InstanceSpec::edges)
      .def_readwrite("total_hosting", &InstanceSpec::total_hosting)
      .def_readwrite("rate_min", &InstanceSpec::rate_min)
      .def_readwrite("rate_max", &InstanceSpec::rate_max)
      .def_readwrite("seed", &InstanceSpec::seed)
      .def("__repr__", [](const InstanceSpec& s) {
        return "InstanceSpec(name='" + s.name +
               "', nodes=" + std::to_string(s.nodes) +
               ", edges=" + std::to_string(s.edges) + ")";
      });

  m.def("evaluate_cost", &evaluate_cost, py::arg("graph"), py::arg("placement"),
        py::arg("params"),
        "Hosting + public + hybrid communication cost of a placement");
  m.def("is_feasible", &is_feasible, py::arg("graph"), py::arg("placement"),
        py::arg("params"));
  m.def("public_hosting", &public_hosting, py::arg("graph"),
        py::arg("placement"));
  m.def("total_hosting", &total_hosting, py::arg("graph"));
  m.def("density_percent", &density_percent, py::arg("graph"));
  m.def("hq_from_fraction", &hq_from_fraction, py::arg("graph"),
        py::arg("fraction"));

  m.def("exact_solve", &exact_solve, py::arg("graph"), py::arg("params"),
        py::arg("max_nodes") = kDefaultExactNodeLimit,
        py::call_guard<py::gil_scoped_release>());
  m.def("exact_solve_bnb", &exact_solve_bnb, py::arg("graph"),
        py::arg("params"), py::arg("max_nodes") = kDefaultExactNodeLimit,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "bpso_solve",
      [](const SbaGraph& g, const CostParams& p, const BpsoConfig& cfg) {
        return bpso_solve(g, p, cfg);
      },
      py::arg("graph"), py::arg("params"), py::arg("config") = BpsoConfig{},
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "ga_solve",
      [](const SbaGraph& g, const CostParams& p, const GaConfig& cfg) {
        return ga_solve(g, p, cfg);
      },
      py::arg("graph"), py::arg("params"), py::arg("config") = GaConfig{},
      py::call_guard<py::gil_scoped_release>());
  m.def("greedy_solve", &greedy_solve, py::arg("graph"), py::arg("params"),
        py::call_guard<py::gil_scoped_release>());
  m.def("repair_placement", &repair_placement, py::arg("graph"),
        py::arg("placement"), py::arg("params"));
  m.def("sigmoid", &sigmoid, py::arg("v"));

  m.def("preset_specs", &preset_specs, "The ten bundled instance presets");
  m.def("preset", &preset, py::arg("name"));
  m.def("generate_instance", &generate_instance, py::arg("spec"));

  py::enum_<GraphFormat>(m, "GraphFormat")
      .value("canonical", GraphFormat::canonical)
      .value("edge_list", GraphFormat::edge_list);
  m.def("read_graph", &read_graph, py::arg("path"));
  m.def("parse_graph", &parse_graph, py::arg("text"),
        py::arg("origin") = "<string>");
  m.def("write_graph", &write_graph, py::arg("graph"), py::arg("path"),
        py::arg("format") = GraphFormat::canonical);
  m.def("format_graph", &format_graph, py::arg("graph"),
        py::arg("format") = GraphFormat::canonical);
}
