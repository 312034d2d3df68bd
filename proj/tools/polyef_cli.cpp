#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyef/constructions.hpp"
#include "polyef/count_matroid.hpp"
#include "polyef/errors.hpp"
#include "polyef/io.hpp"
#include "polyef/simplex.hpp"
#include "polyef/verify.hpp"

namespace {

using namespace polyef;

bool needs_spec(const std::string& name) {
    return name == "count-restricted" || name == "count-general";
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ExtendedFormulation build_formulation(const std::string& name, const Graph& g,
                                      const std::optional<CountMatroidSpec>& spec,
                                      const std::string& face_nodes) {
    if (name == "face" && face_nodes.empty())
        throw InputError("face needs --nodes with at least one label");
    NodeSet t = face_nodes.empty() ? NodeSet{} : g.node_set(split_labels(face_nodes));
    return build_named_formulation(name, g, spec, t);
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file '" + path + "'");
    out << text;
}

std::string point_listing(const std::vector<std::string>& vars, const RatVector& point,
                          const std::vector<int>& idx) {
    std::string out;
    for (std::size_t j = 0; j < vars.size(); ++j)
        out += vars[j] + " = " + point[idx[j]].str() + "\n";
    return out;
}

std::string vertex_line(const RatVector& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].str();
    }
    return out + ")";
}

std::string edge_set_line(const Graph& g, const EdgeSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += g.edge(f[i]).id;
    }
    return out + "}";
}

int run_construct(const std::string& name, const std::string& graph_path,
                  const std::string& spec_path, const std::string& face_nodes,
                  const std::string& format, const std::string& output) {
    if (needs_spec(name) && spec_path.empty())
        throw InputError(name + " needs a matroid spec file");
    Graph g = load_graph_file(graph_path);
    std::optional<CountMatroidSpec> spec;
    if (!spec_path.empty()) spec = load_matroid_spec_file(spec_path, g);
    auto ef = build_formulation(name, g, spec, face_nodes);
    write_out(format == "lptext" ? system_to_lp_text(ef) : system_to_json(ef), output);
    std::cerr << "size: " << ef.system.ineq_count() << " inequalities, "
              << ef.system.eq_count() << " equations, " << ef.system.var_count()
              << " variables\n";
    return 0;
}

int run_optimize(const std::string& system_path, const std::string& name,
                 const std::string& graph_path, const std::string& spec_path,
                 const std::string& face_nodes, const std::string& objective_path) {
    ExtendedFormulation ef;
    if (!system_path.empty()) {
        std::ifstream in(system_path);
        if (!in) throw InputError("cannot open system file '" + system_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        ef = system_from_json(buf.str());
    } else {
        if (needs_spec(name) && spec_path.empty())
            throw InputError(name + " needs a matroid spec file");
        Graph g = load_graph_file(graph_path);
        std::optional<CountMatroidSpec> spec;
        if (!spec_path.empty()) spec = load_matroid_spec_file(spec_path, g);
        ef = build_formulation(name, g, spec, face_nodes);
    }
    RatVector c = load_objective_file(objective_path, ef.projection);
    auto r = solve_max_projected(ef, c);
    if (r.status != LpStatus::Optimal) {
        std::cout << "status: " << to_string(r.status) << "\n";
        return 2;
    }
    std::cout << "status: optimal\nvalue: " << r.value.str() << "\n"
              << point_listing(ef.projection, r.point, ef.projection_indices());
    return 0;
}

int run_verify(const std::string& suite, const std::string& graph_path,
               const std::string& spec_path, const RunConfig& cfg, const std::string& format,
               const std::string& output) {
    Graph g = load_graph_file(graph_path);
    std::optional<CountMatroidSpec> spec;
    if (!spec_path.empty()) spec = load_matroid_spec_file(spec_path, g);
    auto rep = run_suite(suite, g, spec, cfg);
    write_out(format == "json" ? report_to_json(rep) : report_to_text(rep), output);
    return rep.ok() ? 0 : 1;
}

int run_enumerate(const std::string& what, const std::string& graph_path,
                  const std::string& spec_path) {
    Graph g = load_graph_file(graph_path);
    std::ostringstream out;
    int count = 0;
    if (what == "forests" || what == "spanning-forests") {
        auto sets = what == "forests" ? enumerate_forests(g) : enumerate_spanning_forests(g);
        for (const auto& f : sets) out << edge_set_line(g, f) << "\n";
        count = static_cast<int>(sets.size());
    } else if (what == "independent-sets") {
        if (spec_path.empty()) throw InputError("independent-sets needs a matroid spec file");
        auto spec = load_matroid_spec_file(spec_path, g);
        auto sets = enumerate_independent_sets(spec);
        for (const auto& f : sets) out << edge_set_line(g, f) << "\n";
        count = static_cast<int>(sets.size());
    } else if (what == "subgraph-vertices" || what == "nonempty-vertices") {
        auto vs = enumerate_subgraph_vertices(g, what == "subgraph-vertices"
                                                     ? SubgraphVertexMode::all
                                                     : SubgraphVertexMode::nonempty);
        out << "vars:";
        for (const auto& v : vs.vars) out << " " << v;
        out << "\n";
        for (const auto& p : vs.points) out << vertex_line(p) << "\n";
        count = vs.count();
    } else {
        throw InputError("unknown enumeration '" + what + "'");
    }
    out << "count: " << count << "\n";
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact extended formulations for subgraph, spanning-forest and "
                 "count-matroid polytopes"};
    app.require_subcommand(1);
    int rc = 0;

    auto* construct = app.add_subcommand("construct", "build a formulation and write it out");
    std::string c_name, c_graph, c_spec, c_nodes, c_format = "json", c_output;
    construct->add_option("formulation", c_name, "one of: subgraph, face, nonempty-balas, "
                          "nonempty-outer, nonempty-from-forest, forest-martin, forest-edmonds, "
                          "count-restricted, count-general")
        ->required()
        ->check(CLI::IsMember(formulation_names()));
    construct->add_option("graph", c_graph, "graph file")->required();
    construct->add_option("spec", c_spec, "matroid spec json (count-* only)");
    construct->add_option("--nodes", c_nodes, "comma-separated node labels (face only)");
    construct->add_option("--format", c_format)->check(CLI::IsMember({"json", "lptext"}));
    construct->add_option("--output,-o", c_output, "output path (default stdout)");
    construct->callback(
        [&] { rc = run_construct(c_name, c_graph, c_spec, c_nodes, c_format, c_output); });

    auto* optimize = app.add_subcommand("optimize", "exact LP max over a formulation");
    std::string o_system, o_objective;
    std::vector<std::string> o_args;
    optimize->add_option("--system", o_system, "system json produced by construct");
    optimize->add_option("args", o_args,
                         "either: <objective> (with --system), or <formulation> <graph> [spec] "
                         "<objective>");
    optimize->add_option("--nodes", c_nodes, "comma-separated node labels (face only)");
    optimize->callback([&] {
        std::string name, graph, spec;
        if (!o_system.empty()) {
            if (o_args.size() != 1)
                throw CLI::ValidationError("optimize", "--system takes one objective file");
            o_objective = o_args[0];
        } else if (o_args.size() == 3) {
            name = o_args[0];
            graph = o_args[1];
            o_objective = o_args[2];
        } else if (o_args.size() == 4) {
            name = o_args[0];
            graph = o_args[1];
            spec = o_args[2];
            o_objective = o_args[3];
        } else {
            throw CLI::ValidationError(
                "optimize", "expected --system <file> <objective> or "
                            "<formulation> <graph> [spec] <objective>");
        }
        rc = run_optimize(o_system, name, graph, spec, c_nodes, o_objective);
    });

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_graph, v_spec, v_format = "text", v_output;
    RunConfig cfg;
    int v_k = 0;
    verify->add_option("suite", v_suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("graph", v_graph, "graph file")->required();
    verify->add_option("spec", v_spec, "matroid spec json for the count suites");
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    verify->add_option("--k", v_k, "forest classes for nash-williams (default: 1 and 2)");
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output,-o", v_output, "output path (default stdout)");
    verify->callback([&] {
        if (v_k > 0) cfg.forest_ks = {v_k};
        rc = run_verify(v_suite, v_graph, v_spec, cfg, v_format, v_output);
    });

    auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects");
    std::string e_what, e_graph, e_spec;
    enumerate->add_option("what", e_what)
        ->required()
        ->check(CLI::IsMember({"forests", "spanning-forests", "independent-sets",
                               "subgraph-vertices", "nonempty-vertices"}));
    enumerate->add_option("graph", e_graph, "graph file")->required();
    enumerate->add_option("spec", e_spec, "matroid spec json (independent-sets only)");
    enumerate->callback([&] { rc = run_enumerate(e_what, e_graph, e_spec); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const ScaleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
