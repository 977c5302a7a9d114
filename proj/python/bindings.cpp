#include "inner_rates/cli.hpp"
#include "inner_rates/contact.hpp"
#include "inner_rates/document.hpp"
#include "inner_rates/invariants.hpp"
#include "inner_rates/polar_enum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace inner_rates;

namespace {

py::object to_py(const Integer& i) { return py::module_::import("builtins").attr("int")(i.str()); }

py::object to_py(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

template <typename T>
py::dict per_vertex(const DualGraph& g, const std::vector<T>& values) {
    py::dict out;
    for (std::size_t v = 0; v < g.size(); ++v) out[py::str(g.vertex(v).id)] = to_py(values[v]);
    return out;
}

struct Graph {
    std::string name;
    DualGraph g;

    static Graph from_document(const GraphDocument& doc) { return {doc.name, doc.to_graph()}; }
};

py::dict py_rates(const Graph& graph) {
    const InvariantBundle b = solve_inner_rates(graph.g);
    py::list warnings;
    for (const auto& w : b.warnings) warnings.append(w.message);
    py::dict out;
    out["m"] = per_vertex(graph.g, b.m);
    out["q"] = per_vertex(graph.g, b.q);
    out["a"] = per_vertex(graph.g, b.a);
    out["warnings"] = warnings;
    out["admissible"] = b.admissible();
    return out;
}

py::dict py_laplacian(const Graph& graph) {
    const InvariantBundle b = solve_inner_rates(graph.g);
    const TheoremCheck c = check_theorem_main(graph.g, b);
    py::dict out;
    out["laplacian"] = c.laplacian_defined ? py::object(py::str(c.laplacian.str(graph.g))) : py::object(py::none());
    out["expected"] = c.expected.str(graph.g);
    out["formula"] = c.formula.str(graph.g);
    out["discrepancies"] = c.discrepancies;
    out["holds"] = c.holds;
    return out;
}

py::dict py_le_greuel(const Graph& graph) {
    const LeGreuelCheck c = le_greuel_check(graph.g, solve_multiplicities(graph.g));
    py::dict out;
    out["m_x"] = to_py(c.m_x);
    out["m_pi"] = to_py(c.m_pi);
    out["chi_f"] = to_py(c.chi_f);
    out["holds"] = c.holds;
    return out;
}

py::dict py_contact(const Graph& graph, const std::string& a, const std::string& b) {
    const InvariantBundle bundle = solve_inner_rates(graph.g);
    const ContactResult c = inner_contact(graph.g, bundle.q, graph.g.index_of(a), graph.g.index_of(b));
    py::list path;
    for (const auto& point : c.witness_path) path.append(point.label(graph.g));
    py::dict out;
    out["exponent"] = to_py(c.exponent);
    out["path"] = path;
    out["paths"] = c.all_paths_count;
    return out;
}

py::list py_enumerate_polar(const Graph& graph, bool strict, std::size_t threads) {
    EnumerateOptions options;
    options.strict_rates = strict;
    options.threads = threads;
    EnumerationResult result;
    {
        py::gil_scoped_release release;
        result = enumerate_admissible(graph.g, options);
    }
    py::list out;
    for (const auto& config : result.configs) {
        py::dict d;
        d["p"] = config.p;
        d["q"] = per_vertex(graph.g, config.q);
        d["a"] = per_vertex(graph.g, config.a);
        out.append(d);
    }
    return out;
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inner rates of normal surface singularities from decorated resolution graphs.";

    const auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def_static("parse", [](const std::string& text) { return Graph::from_document(parse_document(text)); },
                    py::arg("text"))
        .def_static("load", [](const std::string& path) { return Graph::from_document(read_document(path)); },
                    py::arg("path"))
        .def_readonly("name", &Graph::name)
        .def_property_readonly("vertices",
                               [](const Graph& g) {
                                   std::vector<std::string> ids;
                                   for (const auto& v : g.g.vertices()) ids.push_back(v.id);
                                   return ids;
                               })
        .def_property_readonly("edge_count", [](const Graph& g) { return g.g.edges().size(); })
        .def("__len__", [](const Graph& g) { return g.g.size(); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + g.name + " with " + std::to_string(g.g.size()) + " vertices>";
        })
        .def("to_text", [](const Graph& g) { return serialize(GraphDocument::from_graph(g.name, g.g)); });

    m.def("multiplicities", [](const Graph& g) { return per_vertex(g.g, solve_multiplicities(g.g)); },
          py::arg("graph"));
    m.def("rates", &py_rates, py::arg("graph"));
    m.def("laplacian", &py_laplacian, py::arg("graph"));
    m.def("le_greuel", &py_le_greuel, py::arg("graph"));
    m.def("contact", &py_contact, py::arg("graph"), py::arg("a"), py::arg("b"));
    m.def("enumerate_polar", &py_enumerate_polar, py::arg("graph"), py::arg("strict") = true,
          py::arg("threads") = 1);
    m.def("run_cli", &run, py::arg("args"), "Runs one command line; returns (exit_code, stdout, stderr).");
}
