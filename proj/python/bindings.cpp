#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyef/constructions.hpp"
#include "polyef/count_matroid.hpp"
#include "polyef/errors.hpp"
#include "polyef/graph.hpp"
#include "polyef/io.hpp"
#include "polyef/simplex.hpp"
#include "polyef/verify.hpp"

namespace py = pybind11;
using namespace polyef;

namespace {

// m is an int (uniform) or a {node label: int} dict covering every node.
std::optional<CountMatroidSpec> spec_of(const Graph& g, const py::object& m,
                                        const py::object& ell) {
    if (m.is_none() && ell.is_none()) return std::nullopt;
    if (m.is_none() || ell.is_none()) throw InputError("m and ell must be given together");
    long l = ell.cast<long>();
    if (py::isinstance<py::dict>(m)) {
        std::vector<long> mv(g.node_count(), 0);
        std::vector<bool> seen(g.node_count(), false);
        for (auto item : m.cast<py::dict>()) {
            int i = g.node_index(item.first.cast<std::string>());
            mv[i] = item.second.cast<long>();
            seen[i] = true;
        }
        for (int i = 0; i < g.node_count(); ++i)
            if (!seen[i]) throw InputError("m is missing node '" + g.node_label(i) + "'");
        return make_count_matroid(g, mv, l);
    }
    return sparsity_spec(g, m.cast<long>(), l);
}

std::vector<std::vector<std::string>> id_lists(const Graph& g, const std::vector<EdgeSet>& sets) {
    std::vector<std::vector<std::string>> out;
    out.reserve(sets.size());
    for (const auto& f : sets) {
        std::vector<std::string> ids;
        ids.reserve(f.size());
        for (int e : f) ids.push_back(g.edge(e).id);
        out.push_back(std::move(ids));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_polyef, mod) {
    mod.doc() = "exact extended formulations for subgraph, spanning-forest and "
                "count-matroid polytopes";

    py::register_exception<Error>(mod, "PolyefError");

    py::class_<Graph>(mod, "Graph")
        .def_static(
            "from_text",
            [](const std::string& text) {
                std::istringstream in(text);
                return parse_graph(in, "<text>");
            },
            py::arg("text"))
        .def_static("from_file", &load_graph_file, py::arg("path"))
        .def("node_count", &Graph::node_count)
        .def("edge_count", &Graph::edge_count)
        .def_property_readonly("node_labels", &Graph::node_labels)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   out.reserve(g.edge_count());
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.id, g.node_label(e.u), g.node_label(e.v));
                                   return out;
                               })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.node_count()) + " nodes, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<ExtendedFormulation>(mod, "Formulation")
        .def("size", &ExtendedFormulation::size)
        .def("equation_count", [](const ExtendedFormulation& e) { return e.system.eq_count(); })
        .def("variable_count", [](const ExtendedFormulation& e) { return e.system.var_count(); })
        .def_property_readonly("variables",
                               [](const ExtendedFormulation& e) { return e.system.variables(); })
        .def_property_readonly("projection",
                               [](const ExtendedFormulation& e) { return e.projection; })
        .def("to_json", [](const ExtendedFormulation& e, int indent) { return system_to_json(e, indent); },
             py::arg("indent") = 2)
        .def("to_lp_text", [](const ExtendedFormulation& e) { return system_to_lp_text(e); })
        .def("__repr__", [](const ExtendedFormulation& e) {
            return "Formulation(" + std::to_string(e.size()) + " inequalities, " +
                   std::to_string(e.system.eq_count()) + " equations, " +
                   std::to_string(e.system.var_count()) + " variables)";
        });

    mod.def("formulation_names", [] { return formulation_names(); });
    mod.def("suite_names", [] { return suite_names(); });

    mod.def(
        "construct",
        [](const std::string& name, const Graph& g, const py::object& m, const py::object& ell,
           const std::vector<std::string>& nodes) {
            NodeSet t = nodes.empty() ? NodeSet{} : g.node_set(nodes);
            return build_named_formulation(name, g, spec_of(g, m, ell), t);
        },
        py::arg("name"), py::arg("graph"), py::arg("m") = py::none(), py::arg("ell") = py::none(),
        py::arg("nodes") = std::vector<std::string>{});

    mod.def("from_json", &system_from_json, py::arg("text"));

    // objective: {var: int or "p/q"}; unnamed variables get coefficient zero.
    mod.def(
        "maximize",
        [](const ExtendedFormulation& e, const py::dict& objective) {
            RatVector c(e.system.var_count(), rat(0));
            for (auto item : objective) {
                int i = e.system.var_index(item.first.cast<std::string>());
                c[i] = Rational::parse(py::str(item.second).cast<std::string>());
            }
            LpResult r = solve_max(e.system, c);
            py::dict out;
            out["status"] = std::string(to_string(r.status));
            if (r.status == LpStatus::Optimal) {
                out["value"] = r.value.str();
                py::dict pt;
                for (int i = 0; i < e.system.var_count(); ++i)
                    pt[py::str(e.system.var_name(i))] = r.point[i].str();
                out["point"] = pt;
            }
            return out;
        },
        py::arg("formulation"), py::arg("objective"));

    // Returns the verification report as a json string.
    mod.def(
        "run_suite",
        [](const std::string& suite, const Graph& g, const py::object& m, const py::object& ell,
           unsigned long seed, int trials) {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            return report_to_json(run_suite(suite, g, spec_of(g, m, ell), cfg));
        },
        py::arg("suite"), py::arg("graph"), py::arg("m") = py::none(),
        py::arg("ell") = py::none(), py::arg("seed") = 0UL, py::arg("trials") = 50);

    mod.def(
        "forests", [](const Graph& g) { return id_lists(g, enumerate_forests(g)); },
        py::arg("graph"));
    mod.def(
        "spanning_forests",
        [](const Graph& g) { return id_lists(g, enumerate_spanning_forests(g)); },
        py::arg("graph"));
    mod.def(
        "independent_sets",
        [](const Graph& g, const py::object& m, const py::object& ell) {
            auto spec = spec_of(g, m, ell);
            if (!spec) throw InputError("independent_sets needs m and ell");
            return id_lists(g, enumerate_independent_sets(*spec));
        },
        py::arg("graph"), py::arg("m"), py::arg("ell"));
}
