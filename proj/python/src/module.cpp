#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bflow/blocks.hpp"
#include "bflow/degree.hpp"
#include "bflow/dp_solver.hpp"
#include "bflow/error.hpp"
#include "bflow/flow_network.hpp"
#include "bflow/generators.hpp"
#include "bflow/graph.hpp"
#include "bflow/oracle.hpp"

namespace py = pybind11;
using namespace bflow;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<std::pair<int, int>> from_edges(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

SolveOptions options(std::optional<int> root, std::optional<std::uint64_t> seed) {
  SolveOptions o;
  o.root = root;
  o.child_order_seed = seed;
  return o;
}

OracleOptions oracle_options(long long budget) {
  OracleOptions o;
  o.budget = budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "b-colorings of claw-free block graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidGraph>(m, "InvalidGraph", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return SimpleGraph::from_edges(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &SimpleGraph::vertex_count)
      .def_property_readonly("m", &SimpleGraph::edge_count)
      .def("degree", &SimpleGraph::degree)
      .def("adjacent", &SimpleGraph::adjacent)
      .def("edges", &from_edges)
      .def("to_edge_list", [](const SimpleGraph& g) { return to_edge_list(g); })
      .def("__repr__", [](const SimpleGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<BlockGraph>(m, "BlockGraph")
      .def_static("from_graph", [](const SimpleGraph& g) { return BlockGraph::validate(g); })
      .def_static("from_tree", [](const SimpleGraph& t) { return BlockGraph::from_tree(Tree::from_graph(t)); })
      .def_property_readonly("graph", &BlockGraph::graph)
      .def_property_readonly("omega", &BlockGraph::omega)
      .def_property_readonly("blocks", [](const BlockGraph& g) { return g.blocks().blocks(); })
      .def_property_readonly("cut_vertices", [](const BlockGraph& g) { return g.blocks().cut_vertices(); });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("line_graph_of_tree", [](const SimpleGraph& t) { return line_graph_of_tree(Tree::from_graph(t)); });
  m.def("random_tree", [](int edges, std::uint64_t seed) { return random_tree(edges, seed).graph(); },
        py::arg("edges"), py::arg("seed"));
  m.def("random_caterpillar",
        [](int edges, int spine, std::uint64_t seed) { return random_caterpillar(edges, spine, seed).graph(); },
        py::arg("edges"), py::arg("spine"), py::arg("seed"));
  m.def("m_degree", &m_degree);
  m.def("dense_vertices", &dense_vertices, py::arg("graph"), py::arg("k"));

  m.def("decide_k",
        [](const BlockGraph& g, int k, std::optional<int> root, std::optional<std::uint64_t> seed) {
          return decide_k(g, k, options(root, seed));
        },
        py::arg("graph"), py::arg("k"), py::arg("root") = py::none(), py::arg("child_order_seed") = py::none());
  m.def("b_chromatic",
        [](const BlockGraph& g, std::optional<int> root, std::optional<std::uint64_t> seed) {
          return b_chromatic(g, options(root, seed));
        },
        py::arg("graph"), py::arg("root") = py::none(), py::arg("child_order_seed") = py::none());
  m.def("max_basis_size",
        [](const BlockGraph& g, int k, int root) { return max_basis_size(root_decomposition(g.blocks(), root), k); },
        py::arg("graph"), py::arg("k"), py::arg("root") = 0);

  m.def("is_flow_feasible",
        [](const BlockGraph& g, const std::vector<Vertex>& w, int k, int root) {
          return is_flow_feasible(root_decomposition(g.blocks(), root), w, k);
        },
        py::arg("graph"), py::arg("w"), py::arg("k"), py::arg("root") = 0);
  m.def("max_feasible_source_set",
        [](const BlockGraph& g, int k, int root) {
          return max_feasible_source_set(root_decomposition(g.blocks(), root), k);
        },
        py::arg("graph"), py::arg("k"), py::arg("root") = 0);

  m.def("max_realized_colors",
        [](const SimpleGraph& g, int k, long long budget) { return max_realized_colors(g, k, oracle_options(budget)); },
        py::arg("graph"), py::arg("k"), py::arg("budget") = OracleOptions{}.budget);
  m.def("exists_coloring_realizing",
        [](const SimpleGraph& g, const std::vector<Vertex>& w, int k, long long budget) {
          return exists_coloring_realizing(g, w, k, oracle_options(budget));
        },
        py::arg("graph"), py::arg("w"), py::arg("k"), py::arg("budget") = OracleOptions{}.budget);
  m.def("verify_b_coloring",
        [](const SimpleGraph& g, int k, const std::vector<int>& colors) {
          return verify_b_coloring(g, Coloring{k, colors});
        },
        py::arg("graph"), py::arg("k"), py::arg("colors"));
}
