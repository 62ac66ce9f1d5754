#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lilyk/cores.hpp"
#include "lilyk/domination.hpp"
#include "lilyk/generators.hpp"
#include "lilyk/harness.hpp"
#include "lilyk/io.hpp"
#include "lilyk/kernels.hpp"
#include "lilyk/oracle.hpp"
#include "lilyk/projections.hpp"
#include "lilyk/wideness.hpp"

namespace py = pybind11;
using namespace lilyk;

namespace {

ProblemParams make_params(int r, int c, int lambda, int mu) { return {r, c, lambda, mu}; }

py::object optimum_obj(const Optimum& o) {
  if (!o) return py::none();
  return py::int_(*o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kernelization for distance-r domination problems";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceGuardError>(m, "ResourceGuardError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static("from_edges",
                  [](std::size_t n, const std::vector<Edge>& edges) {
                    return Graph::from_edges(n, edges);
                  },
                  py::arg("n"), py::arg("edges"))
      .def("__len__", &Graph::size)
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             g.check_vertex(v);
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("add_vertex", &Graph::add_vertex, py::arg("label") = 0)
      .def("add_edge", &Graph::add_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.num_edges()) +
               ">";
      });

  m.def("ball", &ball, py::arg("g"), py::arg("v"), py::arg("r"));
  m.def("bounded_distance", [](const Graph& g, Vertex u, Vertex v, int cap) -> py::object {
    int d = bounded_distance(g, u, v, cap);
    if (d == kInfinity) return py::none();
    return py::int_(d);
  });
  m.def("greedy_scattered", &greedy_scattered, py::arg("g"), py::arg("x"), py::arg("r"));
  m.def("wcol_upper_bound", [](const Graph& g, int r) { return wcol_upper_bound(g, r).value; });
  m.def("degeneracy", &degeneracy);

  m.def("grid", &grid);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("spider_forest", &spider_forest);
  m.def("random_degenerate", &random_degenerate, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("generate", [](const std::string& spec, std::uint64_t seed, bool relabel) {
    auto s = parse_generator(spec, seed);
    s.relabel = relabel;
    return generate(s);
  }, py::arg("spec"), py::arg("seed") = 0, py::arg("relabel") = false);

  m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph));
  m.def("serialize_graph", &serialize_graph);

  m.def("approx_dominating", [](const Graph& g, int r) {
    auto res = approx_dominating(g, all_vertices(g), r);
    return py::dict(py::arg("dominators") = res.dominators, py::arg("witnesses") = res.witnesses,
                    py::arg("ratio") = res.certified_ratio.to_double());
  });
  m.def("approx_rc_dominating", [](const Graph& g, int r, int c) -> py::object {
    auto res = approx_rc_dominating(g, r, c);
    if (!res.feasible) return py::none();
    return py::cast(res.dominators);
  });

  py::class_<OracleAnswer>(m, "OracleAnswer")
      .def_readonly("feasible", &OracleAnswer::feasible)
      .def_readonly("optimum", &OracleAnswer::optimum)
      .def_readonly("witness", &OracleAnswer::witness)
      .def_readonly("witness_heavy", &OracleAnswer::witness_heavy)
      .def_readonly("enumerated", &OracleAnswer::enumerated);

  m.def("opt_rc_dom", [](const Graph& g, int r, int c) { return opt_rc_dom(g, r, c); });
  m.def("opt_total", [](const Graph& g, int r) { return opt_total(g, r); });
  m.def("opt_roman", [](const Graph& g, int r) { return opt_roman(g, r); });
  m.def("max_scattered", [](const Graph& g, int r, int c) { return max_scattered(g, r, c); });
  m.def("opt_lambda_mu",
        [](const Graph& g, int r, int lambda, int mu) { return opt_lambda_mu(g, r, lambda, mu); });
  m.def("opt_perfect_code", [](const Graph& g, int r) { return opt_perfect_code(g, r); });

  py::class_<AnnotatedInstance>(m, "AnnotatedInstance")
      .def_readonly("graph", &AnnotatedInstance::graph)
      .def_property_readonly("problem",
                             [](const AnnotatedInstance& i) { return problem_name(i.problem); })
      .def_readonly("k", &AnnotatedInstance::k)
      .def_readonly("L", &AnnotatedInstance::L)
      .def_readonly("U", &AnnotatedInstance::U)
      .def_readonly("offset", &AnnotatedInstance::offset)
      .def_readonly("origin", &AnnotatedInstance::origin)
      .def_readonly("trivial", &AnnotatedInstance::trivial)
      .def("serialize", &serialize_instance)
      .def_static("parse", py::overload_cast<const std::string&>(&parse_instance))
      .def("__eq__", [](const AnnotatedInstance& a, const AnnotatedInstance& b) { return a == b; });

  m.def("bikernel",
        [](const Graph& g, const std::string& problem, std::int64_t k, int r, int c, int lambda,
           int mu) {
          return emit_bikernel(
              prepare_bikernel(g, parse_problem(problem), make_params(r, c, lambda, mu)), k);
        },
        py::arg("g"), py::arg("problem"), py::arg("k"), py::arg("r") = 1, py::arg("c") = 1,
        py::arg("lambda_") = 1, py::arg("mu") = 1);
  m.def("kernelize",
        [](const Graph& g, const std::string& problem, std::int64_t k, int r, int c) {
          return kernelize(g, parse_problem(problem), make_params(r, c, 1, 1), k);
        },
        py::arg("g"), py::arg("problem"), py::arg("k"), py::arg("r") = 1, py::arg("c") = 1);
  m.def("annotated_optimum", [](const AnnotatedInstance& inst) {
    return optimum_obj(annotated_optimum(inst, OracleOptions{64}));
  });

  m.def("multikernel_domination_family", [](const Graph& g, int r) {
    auto mk = multikernel_domination_family(g, r);
    return py::dict(py::arg("graph") = mk.graph, py::arg("dom_offset") = mk.dom_offset,
                    py::arg("total_offset") = mk.total_offset,
                    py::arg("roman_offset") = mk.roman_offset);
  });
  m.def("multikernel_dom_ind", [](const Graph& g, int lambda, int mu) {
    auto mk = multikernel_dom_ind(g, lambda, mu);
    return py::dict(py::arg("graph") = mk.graph, py::arg("sigma") = mk.sigma,
                    py::arg("offsets") = mk.radius_offsets);
  });

  m.def("projection_kernel", [](const Graph& g, const VertexSet& x, int r, int c) {
    auto kern = projection_kernel(g, x, r, c);
    return kern.kept;
  });
  m.def("verify_projection_kernel",
        [](const Graph& g, const VertexSet& x, const VertexSet& kept, int r, int c) {
          return verify_projection_kernel(g, x, kept, r, c).ok();
        });

  m.def("find_uniform_lily",
        [](const Graph& g, const VertexSet& a_set, int depth, int radius, int adhesion,
           std::size_t min_centres) -> py::object {
          auto lily = find_uniform_lily(g, a_set, depth, radius, adhesion, min_centres);
          if (!lily) return py::none();
          bool ok = verify_lily(g, *lily).ok();
          return py::dict(py::arg("roots") = lily->roots, py::arg("centres") = lily->centres,
                          py::arg("verified") = ok);
        });

  m.def("verify_pipeline",
        [](const Graph& g, const std::string& problem, int r, int c, int lambda, int mu,
           std::int64_t k_lo, std::int64_t k_hi) {
          auto rep = verify_pipeline(g, parse_problem(problem), make_params(r, c, lambda, mu),
                                     k_lo, k_hi);
          return py::dict(py::arg("ok") = rep.ok(), py::arg("disagreements") = rep.disagreements,
                          py::arg("optimum") = optimum_obj(rep.original),
                          py::arg("report") = rep.text());
        },
        py::arg("g"), py::arg("problem"), py::arg("r") = 1, py::arg("c") = 1,
        py::arg("lambda_") = 1, py::arg("mu") = 1, py::arg("k_lo") = 0, py::arg("k_hi") = 0);
}
