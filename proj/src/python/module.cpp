#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gisemi/closed.hpp"
#include "gisemi/conjugacy.hpp"
#include "gisemi/cosets.hpp"
#include "gisemi/error.hpp"
#include "gisemi/fixtures.hpp"
#include "gisemi/io.hpp"
#include "gisemi/oracle.hpp"
#include "gisemi/path_counting.hpp"

namespace py = pybind11;
using namespace gisemi;

namespace {

  // Index as a Python value: an int, or None for infinite index.
  py::object count_to_py(Count const& c) {
    if (c.is_infinite()) {
      return py::none();
    }
    return py::int_(c.value());
  }

}  // namespace

PYBIND11_MODULE(_gisemi, m) {
  m.doc() = "Graph inverse semigroups: elements, closed inverse "
            "subsemigroups, cosets, index and conjugacy";

  static py::exception<Error> error(m, "GisemiError", PyExc_RuntimeError);
  static py::exception<Error> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      std::string const message
          = std::string(to_string(e.kind())) + ": " + e.what();
      if (e.kind() == ErrorKind::parse) {
        PyErr_SetString(parse_error.ptr(), message.c_str());
      } else {
        PyErr_SetString(error.ptr(), message.c_str());
      }
    }
  });

  py::class_<Path>(m, "Path")
      .def_property_readonly("length", &Path::length)
      .def("__len__", &Path::length)
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<Element>(m, "Element")
      .def_static("zero", &Element::zero)
      .def_property_readonly("is_zero", &Element::is_zero)
      .def_property_readonly("is_idempotent", &Element::is_idempotent)
      .def_property_readonly("left", &Element::left)
      .def_property_readonly("right", &Element::right)
      .def("__mul__", &multiply)
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<ClosedInvSub>(m, "Subsemigroup")
      .def_static("improper", &ClosedInvSub::improper)
      .def_property_readonly(
          "kind",
          [](ClosedInvSub const& L) { return std::string(to_string(L.kind())); })
      .def_property_readonly("is_proper", &ClosedInvSub::is_proper)
      .def("__contains__", &membership)
      .def(py::self == py::self);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_static("parse", &io::parse_graph, py::arg("text"))
      .def_static(
          "fixture",
          [](std::string const& name) {
            auto g = fixtures::by_name(name);
            if (!g) {
              throw Error(ErrorKind::parse, "unknown fixture '" + name + "'");
            }
            return *g;
          },
          py::arg("name"))
      .def("add_vertex",
           [](Graph& g, std::string const& name) { g.add_vertex(name); })
      .def("add_edge",
           [](Graph& g,
              std::string const& name,
              std::string const& source,
              std::string const& target) {
             g.add_edge(name, source, target);
           })
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("path", &io::parse_path, py::arg("literal"))
      .def("element", &io::parse_element, py::arg("literal"))
      .def("subsemigroup", &io::parse_subsemigroup, py::arg("literal"))
      .def("format", &io::format_path)
      .def("format", &io::format_element)
      .def("format", &io::format_subsemigroup)
      .def("__str__", &io::format_graph);

  m.def("multiply", &multiply, py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse, py::arg("a"));
  m.def("natural_leq", &natural_leq, py::arg("a"), py::arg("b"));
  m.def("up_set", &up_set, py::arg("a"));
  m.def("enumerate_elements",
        &enumerate_elements,
        py::arg("graph"),
        py::arg("max_len"));
  m.def("membership", &membership, py::arg("L"), py::arg("x"));
  m.def(
      "generated",
      [](std::vector<Element> const& gens) { return generated(gens); },
      py::arg("gens"));
  m.def("root",
        [](Graph const& g, ClosedInvSub const& L) {
          return g.name(root(L));
        });
  m.def(
      "count_paths_from",
      [](Graph const& g, std::string const& v) {
        return count_to_py(count_paths_from(g, g.vertex(v)));
      },
      py::arg("graph"),
      py::arg("vertex"));
  m.def(
      "index",
      [](Graph const& g, ClosedInvSub const& L) {
        return count_to_py(index(g, L));
      },
      py::arg("graph"),
      py::arg("L"));
  m.def("coset_representatives",
        &coset_representatives,
        py::arg("graph"),
        py::arg("L"));
  m.def("same_coset", &same_coset, py::arg("L"), py::arg("a"), py::arg("b"));
  m.def("are_conjugate", &are_conjugate, py::arg("L"), py::arg("K"));
  m.def("conjugator", &conjugator, py::arg("L"), py::arg("K"));
  m.def(
      "oracle_index_profile",
      [](Graph const& g, ClosedInvSub const& L, std::size_t max_len) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        oracle::BoundedUniverse const                    U(g, max_len);
        for (auto const& [bound, cosets] : oracle::index_profile(U, L)) {
          out.emplace_back(bound, cosets);
        }
        return out;
      },
      py::arg("graph"),
      py::arg("L"),
      py::arg("max_len") = oracle::default_max_len);
  m.def(
      "oracle_closure",
      [](Graph const&                g,
         std::vector<Element> const& gens,
         std::size_t                 max_len) {
        oracle::BoundedUniverse const U(g, max_len);
        auto sat = oracle::closure_saturate(U, gens);
        return std::make_pair(
            std::vector<Element>(sat.elements.begin(), sat.elements.end()),
            sat.contains_zero);
      },
      py::arg("graph"),
      py::arg("gens"),
      py::arg("max_len") = oracle::default_max_len);
}
