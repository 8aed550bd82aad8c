// Copyright 2026 The kttt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kttt/bench.hpp"
#include "kttt/coloring.hpp"
#include "kttt/generators.hpp"
#include "kttt/nibble.hpp"
#include "kttt/partition.hpp"
#include "kttt/turan_order.hpp"

namespace py = pybind11;
using namespace kttt;

namespace {

Vertex checked(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw py::index_error("vertex " + std::to_string(v) + " out of range");
  return v;
}

VertexSet to_set(const Graph& g, const std::vector<Vertex>& members) {
  VertexSet s(g.num_vertices());
  for (Vertex v : members) s.insert(checked(g, v));
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independent sets and colourings of K_{t,t,t}-free graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_RuntimeError);
  py::register_exception<PartitionFailure>(m, "PartitionFailure", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_static(
          "parse", [](const std::string& text) { return parse_edge_list(std::string_view(text)); }, py::arg("text"))
      .def("to_text",
           [](const Graph& g) {
             std::ostringstream out;
             write_edge_list(out, g);
             return out.str();
           })
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def(
          "degree", [](const Graph& g, Vertex v) { return g.degree(checked(g, v)); }, py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, Vertex v) {
            auto s = g.neighbors(checked(g, v));
            return std::vector<Vertex>(s.begin(), s.end());
          },
          py::arg("v"))
      .def(
          "adjacent", [](const Graph& g, Vertex u, Vertex v) { return g.adjacent(checked(g, u), checked(g, v)); },
          py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "generate", [](const std::string& spec, std::uint64_t seed) { return generate(parse_gen_spec(spec, seed)); },
      py::arg("spec"), py::arg("seed") = 1, "Builds a graph from a generator spec such as 'gnp:n=1000,d=8'.");

  m.def("triangle_count", &triangle_count);
  m.def("is_independent", [](const Graph& g, const std::vector<Vertex>& s) { return is_independent(g, to_set(g, s)); });
  m.def("greedy_independent_set", [](const Graph& g) { return greedy_independent_set(g).members(); });
  m.def(
      "exact_mis", [](const Graph& g, std::size_t cap) { return exact_mis(g, cap).members(); }, py::arg("g"),
      py::arg("node_cap") = kDefaultMisNodeCap);

  m.def("left_sparse_ordering", [](const Graph& g) {
    auto o = left_sparse_ordering(g);
    return py::make_tuple(o.order, o.left_tri);
  });

  m.def("expected_survivors", &expected_survivors, py::arg("g"), py::arg("p"));
  m.def("expected_residual_edges", &expected_residual_edges, py::arg("g"), py::arg("p"));
  m.def(
      "reference_bounds",
      [](std::size_t n, double d, double eps) {
        auto b = reference_bounds(n, d, eps);
        return py::make_tuple(b.greedy, b.shearer_target);
      },
      py::arg("n"), py::arg("d"), py::arg("eps"));

  m.def(
      "run_nibble",
      [](const Graph& g, double eps, std::uint64_t seed, std::uint64_t t, bool finish) {
        auto params = NibbleParams::from_eps(eps, t);
        params.finish_with_greedy = finish;
        params.validate();
        auto out = run_nibble(g, params, algorithm_rng(seed, "nibble"));
        std::vector<std::string> trace;
        for (const auto& r : out.trace.records) trace.push_back(trace_record_json(r));
        py::dict d;
        d["iset"] = out.iset.members();
        d["nibble_iset"] = out.nibble_iset.members();
        d["n_clean"] = out.trace.count(StepKind::clean);
        d["n_nibble"] = out.trace.count(StepKind::nibble);
        d["stop_reason"] = std::string(to_string(out.trace.stop_reason()));
        d["trace"] = trace;
        d["cleaning_check_pass"] = check_cleaning_inequalities(out.trace).pass();
        return d;
      },
      py::arg("g"), py::arg("eps") = 0.25, py::arg("seed") = 1, py::arg("t") = 1, py::arg("finish") = true);

  m.def(
      "color",
      [](const Graph& g, std::uint64_t t, const std::string& strategy, std::uint64_t seed) {
        auto res = color_kttt_free(g, t, part_colorer_from_string(strategy), algorithm_rng(seed, "color"));
        return py::make_tuple(res.coloring.color_of, res.coloring.palette_size);
      },
      py::arg("g"), py::arg("t") = 1, py::arg("strategy") = "greedy_degeneracy", py::arg("seed") = 1);
  m.def(
      "verify_coloring",
      [](const Graph& g, const std::vector<std::uint32_t>& c) {
        if (c.size() != g.num_vertices()) throw py::value_error("one colour per vertex expected");
        Coloring col{c, 0};
        for (auto x : c) col.palette_size = std::max(col.palette_size, x + 1);
        return verify_coloring(g, col).pass;
      },
      py::arg("g"), py::arg("colors"));

  m.def(
      "partition",
      [](const Graph& g, std::uint64_t t, std::uint64_t seed) {
        auto params = default_params(std::max<std::uint64_t>(1, g.max_degree()), t);
        auto res = partition_triangle_free(g, params, algorithm_rng(seed, "partition"));
        bool ok = verify_partition(g, res.partition.class_of, params.part_degree_bound).pass;
        return py::make_tuple(res.partition.class_of, res.partition.k, ok);
      },
      py::arg("g"), py::arg("t") = 1, py::arg("seed") = 1);
}
