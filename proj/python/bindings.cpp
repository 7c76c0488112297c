#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdlib>
#include <string>

#include "geoconv/classes.hpp"
#include "geoconv/convexity.hpp"
#include "geoconv/enumeration.hpp"
#include "geoconv/error.hpp"
#include "geoconv/io.hpp"
#include "geoconv/matroid.hpp"
#include "geoconv/separation.hpp"
#include "geoconv/twosat.hpp"

namespace py = pybind11;
using namespace geoconv;

namespace {

// Vertex sets cross the boundary as sorted lists of ints.
VertexSet to_set(std::size_t n, const std::vector<Vertex>& vs) {
  VertexSet s(n);
  for (Vertex v : vs) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::vector<Vertex> to_list(const VertexSet& s) { return s.members(); }

std::vector<std::vector<Vertex>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

Graph make_graph(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return Graph::from_edges(order, es);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

// DIMACS-style literals: +k is variable k-1, -k its negation.
twosat::Formula make_formula(std::size_t var_count, const std::vector<std::pair<int, int>>& clauses) {
  twosat::Formula f(var_count);
  auto literal = [](int lit) {
    if (lit == 0) throw Error(ErrorKind::InvalidArgument, "literal 0 is not allowed");
    return twosat::Literal{std::abs(lit) - 1, lit > 0};
  };
  for (const auto& [a, b] : clauses) f.add(literal(a), literal(b));
  return f;
}

py::dict report_dict(const ClassReport& r) {
  py::dict d;
  d["class"] = std::string(to_string(r.graph_class));
  d["holds"] = r.holds;
  d["violated"] = r.violated ? py::cast(std::string(to_string(*r.violated))) : py::none();
  d["witness"] = r.witness;
  return d;
}

py::dict outcome_dict(const SeparationOutcome& o) {
  py::dict d;
  d["answer"] = std::string(to_string(o.answer));
  d["halfspace"] = o.halfspace ? py::cast(to_list(*o.halfspace)) : py::none();
  d["branch"] = o.branch ? py::cast(*o.branch) : py::none();
  d["path"] = o.path;
  d["certified"] = o.certified;
  d["base_case"] = std::string(o.base_case);
  py::list branches;
  for (const auto& b : o.diagnostics) {
    py::dict bd;
    bd["index"] = b.index;
    bd["edge"] = std::make_pair(b.edge.u, b.edge.v);
    bd["status"] = std::string(to_string(b.status));
    bd["closure_rounds"] = b.closure_rounds;
    bd["residue_size"] = b.residue_size;
    bd["clause_count"] = b.clause_count;
    bd["tc_prerequisite_failed"] = b.tc_prerequisite_failed;
    branches.append(bd);
  }
  d["branches"] = branches;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geodesic convexity in graphs: hulls, halfspace separation, enumeration, class checks";

  py::register_exception<Error>(m, "GeoconvError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw py::index_error("vertex out of range");
        return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
      })
      .def("adjacent", &Graph::adjacent)
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) {
    auto lg = parse_graph(text);
    return py::make_tuple(lg.graph, lg.labels);
  }, py::arg("text"), "Parse the 'n m' edge-list format. Returns (graph, labels).");
  m.def("format_graph", &format_graph);

  py::class_<GeodesicSpace>(m, "GeodesicSpace")
      .def(py::init<Graph>(), py::arg("graph"))
      .def_property_readonly("graph", &GeodesicSpace::graph)
      .def_property_readonly("order", &GeodesicSpace::order)
      .def_property_readonly("diameter", &GeodesicSpace::diameter)
      .def("distance", &GeodesicSpace::distance)
      .def("interval", [](const GeodesicSpace& s, Vertex u, Vertex v) { return to_list(s.interval(u, v)); })
      .def("ball", [](const GeodesicSpace& s, Vertex v, int r) { return to_list(s.ball(v, r)); })
      .def("sphere", [](const GeodesicSpace& s, Vertex v, int r) { return to_list(s.sphere(v, r)); })
      .def("shortest_connecting_path", [](const GeodesicSpace& s, const std::vector<Vertex>& a,
                                          const std::vector<Vertex>& b) {
        return s.shortest_connecting_path(to_set(s.order(), a), to_set(s.order(), b));
      });

  m.def("hull", [](const GeodesicSpace& s, const std::vector<Vertex>& vs) {
    return to_list(hull(s, to_set(s.order(), vs)));
  });
  m.def("is_convex", [](const GeodesicSpace& s, const std::vector<Vertex>& vs) {
    return is_convex(s, to_set(s.order(), vs));
  });
  m.def("is_locally_convex", [](const GeodesicSpace& s, const std::vector<Vertex>& vs) {
    return is_locally_convex(s, to_set(s.order(), vs));
  });
  m.def("is_halfspace", [](const GeodesicSpace& s, const std::vector<Vertex>& vs) {
    return is_halfspace(s, to_set(s.order(), vs));
  });

  m.def("shadow", [](const GeodesicSpace& s, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return to_list(shadow(s, to_set(s.order(), a), to_set(s.order(), b)));
  });
  m.def("shadow_closure", [](const GeodesicSpace& s, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const auto c = shadow_closure(s, to_set(s.order(), a), to_set(s.order(), b));
    return py::make_tuple(to_list(c.a), to_list(c.b), c.trace.size() - 1);
  }, "Returns (A*, B*, rounds). A* and B* may overlap.");

  m.def("halfspace_separation",
        [](const GeodesicSpace& s, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
           std::optional<bool> certified) {
          return outcome_dict(halfspace_separation(s, to_set(s.order(), a), to_set(s.order(), b), {certified}));
        },
        py::arg("space"), py::arg("a"), py::arg("b"), py::arg("certified") = py::none(),
        "Decide whether a halfspace contains a and avoids b. certified=None runs the class checks.");

  m.def("enumerate_flashlight", [](const GeodesicSpace& s) {
    const auto r = enumerate_flashlight(s);
    py::dict d;
    d["halfspaces"] = to_lists(r.list.halfspaces);
    d["extension_calls"] = r.extension_calls;
    d["tree_nodes"] = r.tree_nodes;
    d["certified"] = r.certified;
    d["complete"] = r.complete();
    return d;
  });
  m.def("enumerate_bruteforce", [](const GeodesicSpace& s) {
    return to_lists(enumerate_bruteforce(s).halfspaces);
  });

  m.def("classify", [](const GeodesicSpace& s) {
    py::list out;
    for (const auto& r : classify(s)) out.append(report_dict(r));
    return out;
  });
  m.def("certify", [](const GeodesicSpace& s) {
    const auto c = certify(s);
    py::dict d;
    d["weakly_bridged"] = c.weakly_bridged;
    d["pseudo_modular"] = c.pseudo_modular;
    d["matroid_basis"] = c.matroid_basis;
    return d;
  });
  m.def("satisfies_k_sd", [](const GeodesicSpace& s, int k) { return report_dict(satisfies_k_sd(s, k)); });
  m.def("squares", [](const Graph& g) { return squares(g); });

  py::class_<Matroid>(m, "Matroid")
      .def(py::init([](std::size_t n, std::size_t r, std::vector<Basis> bases) {
             return Matroid::from_bases(n, r, std::move(bases));
           }),
           py::arg("ground_size"), py::arg("rank"), py::arg("bases"))
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("bases", &Matroid::bases);
  m.def("uniform_matroid", [](std::size_t r, std::size_t n) { return uniform_matroid(r, n); }, py::arg("rank"),
        py::arg("ground_size"));
  m.def("graphic_matroid", [](const Graph& g) { return graphic_matroid(g); });
  m.def("basis_graph", &basis_graph);
  m.def("find_exchange_violation", [](const std::vector<Basis>& bases) -> py::object {
    const auto w = find_exchange_violation(bases);
    if (!w) return py::none();
    return py::make_tuple(w->a, w->b, w->element);
  }, "Returns (A, B, i) for the first violation, or None.");

  m.def("solve_2sat", [](std::size_t var_count, const std::vector<std::pair<int, int>>& clauses) {
    return twosat::solve(make_formula(var_count, clauses));
  }, py::arg("var_count"), py::arg("clauses"),
        "Clauses are pairs of DIMACS literals (k or -k for variable k-1). Returns a list of bools or None.");
  m.def("count_models_2sat", [](std::size_t var_count, const std::vector<std::pair<int, int>>& clauses) {
    return twosat::count_models_bruteforce(make_formula(var_count, clauses));
  }, py::arg("var_count"), py::arg("clauses"));

  auto gen = m.def_submodule("generators", "Closed-form graph families");
  gen.def("cycle", &generators::cycle);
  gen.def("complete", &generators::complete);
  gen.def("path", &generators::path);
  gen.def("hypercube", &generators::hypercube);
  gen.def("octahedron", &generators::octahedron);
}
