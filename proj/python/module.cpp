#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infocov/coverage.hpp"
#include "infocov/diffusion.hpp"
#include "infocov/generate.hpp"
#include "infocov/graph.hpp"
#include "infocov/selection.hpp"

namespace py = pybind11;
using namespace infocov;
using namespace pybind11::literals;

namespace {

SeedSet to_seeds(std::vector<NodeId> ids) { return SeedSet{std::move(ids)}; }

py::dict estimate_dict(const CoverageEstimate& est) {
  return py::dict("mean"_a = est.mean, "std_error"_a = est.std_error,
                  "expected_active"_a = est.mean_active,
                  "expected_informed"_a = est.mean_informed,
                  "replications"_a = est.replications_used);
}

}  // namespace

PYBIND11_MODULE(infocov, m) {
  m.doc() = "Information coverage on directed graphs: IC/LT cascade simulation, "
            "Monte Carlo and exact live-arc coverage estimation, and seed selection.";

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def_property_readonly("node_count", &DirectedGraph::node_count)
      .def_property_readonly("edge_count", &DirectedGraph::edge_count)
      .def_property_readonly("has_ic_probs", &DirectedGraph::has_ic_probs)
      .def_property_readonly("has_lt_weights", &DirectedGraph::has_lt_weights)
      .def("out_degree", &DirectedGraph::out_degree, "node"_a)
      .def("in_degree", &DirectedGraph::in_degree, "node"_a)
      .def("label", &DirectedGraph::label, "node"_a)
      .def("id_of", [](const DirectedGraph& g, const std::string& label) { return g.id_of(label); },
           "label"_a)
      .def("edges",
           [](const DirectedGraph& g) {
             std::vector<std::tuple<NodeId, NodeId, double, double>> out;
             for (const Edge& e : g.edge_list())
               out.emplace_back(e.src, e.dst, e.ic_prob, e.lt_weight);
             return out;
           },
           "Edge list as (src, dst, ic_prob, lt_weight) tuples.")
      .def("__repr__", [](const DirectedGraph& g) {
        return "DirectedGraph(n=" + std::to_string(g.node_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_readonly("seeds", &SelectionResult::seeds)
      .def_readonly("marginal_gains", &SelectionResult::marginal_gains)
      .def_readonly("evaluations_per_step", &SelectionResult::evaluations_per_step)
      .def_readonly("objective_value", &SelectionResult::objective_value)
      .def("__repr__", [](const SelectionResult& r) {
        std::string out = "SelectionResult(seeds=[";
        for (std::size_t i = 0; i < r.seeds.size(); ++i)
          out += (i ? ", " : "") + std::to_string(r.seeds[i]);
        return out + "])";
      });

  m.def("load_graph", &load_graph_file, "path"_a, "Load an edge-list file.");
  m.def("load_graph_text", [](const std::string& text) { return load_graph_text(text); },
        "text"_a);
  m.def("save_graph", &save_graph_file, "graph"_a, "path"_a);
  m.def("graph_to_text", &graph_to_text, "graph"_a);
  m.def("assign_weights",
        [](const DirectedGraph& g, const std::string& scheme, std::uint64_t seed) {
          return assign_weights(g, WeightScheme::parse(scheme, seed));
        },
        "graph"_a, "scheme"_a, "seed"_a = 0,
        "Assign diffusion parameters: 'uniform:<p>', 'trivalency' or 'wc'.");
  m.def("validate_lt",
        [](const DirectedGraph& g) {
          std::vector<std::pair<NodeId, double>> out;
          for (const LtViolation& v : validate_lt(g)) out.emplace_back(v.node, v.incoming_sum);
          return out;
        },
        "graph"_a, "Nodes whose incoming lt weights sum above 1, with their sums.");

  m.def("simulate",
        [](const DirectedGraph& g, std::vector<NodeId> seeds, const std::string& model,
           std::uint64_t master_seed, std::uint64_t replication) {
          const ReplicationStream stream{master_seed, replication};
          const CascadeOutcome out =
              parse_model(model) == Model::independent_cascade
                  ? simulate_ic(g, to_seeds(std::move(seeds)), stream)
                  : simulate_lt(g, to_seeds(std::move(seeds)), stream);
          return py::make_tuple(out.active, out.informed);
        },
        "graph"_a, "seeds"_a, "model"_a = "ic", "master_seed"_a = 0, "replication"_a = 0,
        "One cascade; returns (active, informed) node lists.");

  m.def("estimate_coverage",
        [](const DirectedGraph& g, std::vector<NodeId> seeds, const std::string& model,
           double lambda, std::uint32_t replications, std::uint64_t master_seed) {
          const CoverageConfig cfg{lambda, replications, master_seed};
          CoverageEstimate est;
          {
            py::gil_scoped_release release;
            est = estimate_coverage(g, to_seeds(std::move(seeds)), parse_model(model), cfg);
          }
          return estimate_dict(est);
        },
        "graph"_a, "seeds"_a, "model"_a = "ic", "lambda_"_a = 1.0,
        "replications"_a = 10000, "master_seed"_a = 0);

  m.def("exact_coverage",
        [](const DirectedGraph& g, std::vector<NodeId> seeds, const std::string& model,
           double lambda) {
          py::gil_scoped_release release;
          return exact_coverage(g, to_seeds(std::move(seeds)), parse_model(model), lambda);
        },
        "graph"_a, "seeds"_a, "model"_a = "ic", "lambda_"_a = 1.0,
        "Exact expectation by live-arc enumeration (small graphs only).");

  m.def("lazy_greedy",
        [](const DirectedGraph& g, const std::string& model, std::uint32_t k, double lambda,
           std::uint32_t replications, std::uint64_t master_seed, const std::string& evaluator) {
          const CoverageConfig cfg{lambda, replications, master_seed};
          py::gil_scoped_release release;
          return lazy_greedy(g, parse_model(model), k, cfg, parse_evaluator(evaluator));
        },
        "graph"_a, "model"_a = "ic", "k"_a = 1, "lambda_"_a = 1.0, "replications"_a = 10000,
        "master_seed"_a = 0, "evaluator"_a = "monte-carlo");

  m.def("effective_degree_rank", &effective_degree_rank, "graph"_a, "k"_a);
  m.def("baseline_out_degree", &baseline_out_degree, "graph"_a, "k"_a);
  m.def("baseline_random", &baseline_random, "graph"_a, "k"_a, "seed"_a = 0);
  m.def("exhaustive_optimal",
        [](const DirectedGraph& g, const std::string& model, std::uint32_t k, double lambda) {
          py::gil_scoped_release release;
          return exhaustive_optimal(g, parse_model(model), k, lambda);
        },
        "graph"_a, "model"_a = "ic", "k"_a = 1, "lambda_"_a = 1.0);

  m.def("erdos_renyi", &erdos_renyi, "n"_a, "p"_a, "seed"_a = 0);
  m.def("scale_free", &scale_free, "n"_a, "attach"_a, "seed"_a = 0);
  m.def("fixture_graph", &fixture_graph, "name"_a);
  m.def("fixture_names", &fixture_names);
}
