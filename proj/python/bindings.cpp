#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chargraph/analysis.hpp"
#include "chargraph/catalog.hpp"
#include "chargraph/character_graph.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/errors.hpp"
#include "chargraph/graph_algorithms.hpp"
#include "chargraph/permutation.hpp"
#include "chargraph/spectrum.hpp"

namespace py = pybind11;
using namespace chargraph;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PermGroup group_of(const std::string& generators, std::size_t cap) {
  return PermGroup::from_generators(parse_generators(generators), cap);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Character degree graphs of finite groups";

  static py::exception<Error> error(m, "ChargraphError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("group_order", [](const std::string& gens, std::size_t cap) { return group_of(gens, cap).order(); },
        py::arg("generators"), py::arg("cap") = kDefaultGroupCap);
  m.def("is_solvable", [](const std::string& gens, std::size_t cap) { return is_solvable(group_of(gens, cap)); },
        py::arg("generators"), py::arg("cap") = kDefaultGroupCap);
  m.def("class_sizes", [](const std::string& gens, std::size_t cap) {
        std::vector<std::uint64_t> sizes;
        const PermGroup g = group_of(gens, cap);
        for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size);
        return sizes;
      }, py::arg("generators"), py::arg("cap") = kDefaultGroupCap);
  m.def("character_degrees",
        [](const std::string& gens, std::size_t cap) { return character_degrees(group_of(gens, cap)).expanded(); },
        py::arg("generators"), py::arg("cap") = kDefaultGroupCap,
        "Irreducible character degrees with multiplicity, sorted.");
  m.def("psl2_2n_degrees", [](unsigned n) { return psl2_2n_degrees(n).distinct_degrees(); }, py::arg("n"));
  m.def("rho", [](const std::vector<std::uint64_t>& d) { return rho(degree_multiset_from_list(d)); },
        py::arg("degrees"));
  m.def("build_graph",
        [](const std::vector<std::uint64_t>& d) { return to_python(to_json(build_graph(degree_multiset_from_list(d)))); },
        py::arg("degrees"), "Character graph as {primes, edges, source}.");
  m.def("char_poly", [](const std::string& graph) {
        py::list out;
        py::object as_int = py::module_::import("builtins").attr("int");
        const IntPolynomial p = char_poly(parse_graph_string(graph));
        for (const auto& c : p.coefficients()) out.append(as_int(c.str()));
        return out;
      }, py::arg("graph"), "Coefficients in ascending degree order.");
  m.def("spectrum", [](const std::string& graph) {
        const SpectrumSummary s = distinct_eigenvalue_count(parse_graph_string(graph));
        py::dict out;
        out["distinct_count"] = s.distinct_count;
        out["integer_eigenvalues"] = s.integer_eigenvalues;
        out["irrational_multiplicity"] = s.irrational_multiplicity;
        return out;
      }, py::arg("graph"));
  m.def("analyze_group",
        [](const std::string& gens, const std::string& solvable) {
          return to_python(analyze_group(group_of(gens, kDefaultGroupCap), parse_solvable_mode(solvable)).to_json());
        },
        py::arg("generators"), py::arg("solvable") = "auto");
  m.def("analyze_degrees",
        [](const std::vector<std::uint64_t>& d, const std::string& solvable) {
          return to_python(analyze_degrees(degree_multiset_from_list(d), parse_solvable_mode(solvable)).to_json());
        },
        py::arg("degrees"), py::arg("solvable") = "unknown");
  m.def("analyze_graph",
        [](const std::string& graph, const std::string& solvable) {
          return to_python(analyze_graph(parse_graph_string(graph), parse_solvable_mode(solvable)).to_json());
        },
        py::arg("graph"), py::arg("solvable") = "unknown");
  m.def("screen", [](const std::string& graph) {
        return to_python(screen_solvable_feasibility(parse_graph_string(graph)).to_json());
      }, py::arg("graph"));
  m.def("list_fixtures", &list_fixtures);
  m.def("load_fixture", [](const std::string& name) { return to_python(to_json(load_fixture(name))); },
        py::arg("name"));
}
