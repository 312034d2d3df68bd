#include "polyef/constructions.hpp"

#include <string>
#include <utility>

#include "polyef/errors.hpp"
#include "polyef/simplex.hpp"

namespace polyef {

namespace {

std::string yvar(const Edge& e) { return "y[" + e.id + "]"; }
std::string zvar(const std::string& label) { return "z[" + label + "]"; }
std::string xvar(const Edge& e) { return "x[" + e.id + "]"; }
std::string wvar(const std::string& label) { return "w[" + label + "]"; }

long forest_size(const Graph& g) { return g.node_count() - connected_components(g).count; }

// x[e] names in edge order, then one pairing name per node.
std::vector<std::string> pairing_names(const Graph& g) {
    std::vector<std::string> names;
    for (const auto& e : g.edges()) names.push_back(xvar(e));
    for (const auto& v : g.node_labels()) names.push_back(wvar(v));
    return names;
}

// Shared tail of the pairing constructions: polar at the given level, node
// block pinned to the constants, edge block kept with x >= 0 added.
ExtendedFormulation pair_and_restrict(const Graph& g, const ExtendedFormulation& ne,
                                      const Rational& gamma,
                                      const std::vector<Rational>& node_values) {
    auto polar = polar_dualize(ne, gamma, pairing_names(g));
    std::vector<std::pair<std::string, Rational>> pin;
    for (int v = 0; v < g.node_count(); ++v)
        pin.emplace_back(wvar(g.node_label(v)), node_values[v]);
    auto out = fix_coordinates(polar, pin);
    for (const auto& e : g.edges()) out.system.add_ineq({{xvar(e), rat(-1)}}, rat(0));
    return out;
}

void require_subgraph_projection(const Graph& g, const ExtendedFormulation& e,
                                 const char* what) {
    std::vector<std::string> want;
    for (const auto& ed : g.edges()) want.push_back(yvar(ed));
    for (const auto& v : g.node_labels()) want.push_back(zvar(v));
    if (e.projection != want)
        throw CompositionError(std::string(what) +
                               " must project onto the graph's y[e], z[v] variables");
}

}  // namespace

NodeFamily singleton_family(const Graph& g) {
    NodeFamily fam;
    for (int v = 0; v < g.node_count(); ++v) fam.push_back({v});
    return fam;
}

NodeFamily edge_family(const Graph& g) {
    NodeFamily fam;
    for (int e = 0; e < g.edge_count(); ++e) fam.push_back(g.endpoints(e));
    return fam;
}

ExtendedFormulation subgraph_system(const Graph& g) {
    LinearSystem s;
    for (const auto& e : g.edges()) s.add_var(yvar(e));
    for (const auto& v : g.node_labels()) s.add_var(zvar(v));
    for (const auto& v : g.node_labels()) {
        s.add_ineq({{zvar(v), rat(-1)}}, rat(0));
        s.add_ineq({{zvar(v), rat(1)}}, rat(1));
    }
    for (const auto& e : g.edges()) {
        s.add_ineq({{yvar(e), rat(-1)}}, rat(0));
        s.add_ineq({{yvar(e), rat(1)}, {zvar(g.node_label(e.u)), rat(-1)}}, rat(0));
        s.add_ineq({{yvar(e), rat(1)}, {zvar(g.node_label(e.v)), rat(-1)}}, rat(0));
    }
    return as_formulation(std::move(s));
}

ExtendedFormulation face_system(const Graph& g, const NodeSet& t) {
    if (t.empty()) throw InputError("face requires a non-empty node set");
    int prev = -1;
    for (int v : t) {
        if (v < 0 || v >= g.node_count())
            throw InputError("node index " + std::to_string(v) + " out of range");
        if (v <= prev) throw InputError("node set must be strictly increasing");
        prev = v;
    }
    auto e = subgraph_system(g);
    for (int v : t) e.system.add_eq({{zvar(g.node_label(v)), rat(1)}}, rat(1));
    return e;
}

ExtendedFormulation balas_union(const std::vector<ExtendedFormulation>& blocks) {
    if (blocks.empty()) throw InputError("union of an empty block list");
    const auto& proj = blocks.front().projection;
    for (const auto& b : blocks) {
        b.validate();
        if (b.projection != proj)
            throw CompositionError("union blocks must share one projection variable list");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!is_feasible(blocks[i].system))
            throw ConstructionError("union block " + std::to_string(i) + " is infeasible");

    LinearSystem out;
    for (const auto& p : proj) out.add_var(p);
    std::vector<std::vector<std::string>> copy_names(blocks.size());
    std::vector<std::string> lam(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string prefix = "blk" + std::to_string(i) + ".";
        for (const auto& name : blocks[i].system.variables()) {
            copy_names[i].push_back(prefix + name);
            out.add_var(copy_names[i].back());
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        lam[i] = "lam[" + std::to_string(i) + "]";
        out.add_var(lam[i]);
    }

    auto scaled = [&](std::size_t i, const Row& row) {
        SparseTerms t;
        for (int j = 0; j < static_cast<int>(row.coeffs.size()); ++j)
            if (!row.coeffs[j].is_zero()) t.emplace_back(copy_names[i][j], row.coeffs[j]);
        if (!row.rhs.is_zero()) t.emplace_back(lam[i], -row.rhs);
        return t;
    };
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (const auto& row : blocks[i].system.inequalities())
            out.add_ineq(scaled(i, row), rat(0));
        for (const auto& row : blocks[i].system.equations()) out.add_eq(scaled(i, row), rat(0));
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) out.add_ineq({{lam[i], rat(-1)}}, rat(0));

    SparseTerms convexity;
    for (std::size_t i = 0; i < blocks.size(); ++i) convexity.emplace_back(lam[i], rat(1));
    out.add_eq(convexity, rat(1));
    for (const auto& p : proj) {
        SparseTerms coupling{{p, rat(1)}};
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            int j = blocks[i].system.var_index(p);
            coupling.emplace_back(copy_names[i][j], rat(-1));
        }
        out.add_eq(coupling, rat(0));
    }
    return ExtendedFormulation{std::move(out), proj};
}

ExtendedFormulation subgraph_family_ef(const Graph& g, const NodeFamily& fam) {
    if (fam.empty()) throw InputError("empty node family");
    std::vector<ExtendedFormulation> blocks;
    blocks.reserve(fam.size());
    for (const auto& t : fam) blocks.push_back(face_system(g, t));
    return balas_union(blocks);
}

ExtendedFormulation polar_dualize(const ExtendedFormulation& q, const Rational& gamma,
                                  std::vector<std::string> u_names) {
    q.validate();
    if (u_names.empty())
        for (const auto& p : q.projection) u_names.push_back("u[" + p + "]");
    if (u_names.size() != q.projection.size())
        throw CompositionError("polar needs one name per projection variable");
    if (!is_feasible(q.system)) throw ConstructionError("polar of an infeasible system");

    const LinearSystem& sys = q.system;
    LinearSystem out;
    for (const auto& n : u_names) out.add_var(n);
    std::vector<std::string> lam(sys.ineq_count()), mu(sys.eq_count());
    for (int i = 0; i < sys.ineq_count(); ++i) {
        lam[i] = "lam[" + std::to_string(i) + "]";
        out.add_var(lam[i]);
    }
    for (int k = 0; k < sys.eq_count(); ++k) {
        mu[k] = "mu[" + std::to_string(k) + "]";
        out.add_var(mu[k]);
    }

    std::vector<int> u_of(sys.var_count(), -1);
    auto proj_idx = q.projection_indices();
    for (std::size_t p = 0; p < proj_idx.size(); ++p) u_of[proj_idx[p]] = static_cast<int>(p);

    // transposed columns: contributions of every multiplier to coordinate j
    for (int j = 0; j < sys.var_count(); ++j) {
        SparseTerms t;
        for (int i = 0; i < sys.ineq_count(); ++i) {
            const Rational& a = sys.inequalities()[i].coeffs[j];
            if (!a.is_zero()) t.emplace_back(lam[i], a);
        }
        for (int k = 0; k < sys.eq_count(); ++k) {
            const Rational& c = sys.equations()[k].coeffs[j];
            if (!c.is_zero()) t.emplace_back(mu[k], c);
        }
        if (u_of[j] >= 0) t.emplace_back(u_names[u_of[j]], rat(-1));
        out.add_eq(t, rat(0));
    }
    for (int i = 0; i < sys.ineq_count(); ++i) out.add_ineq({{lam[i], rat(-1)}}, rat(0));

    SparseTerms level;
    for (int i = 0; i < sys.ineq_count(); ++i)
        if (!sys.inequalities()[i].rhs.is_zero()) level.emplace_back(lam[i], sys.inequalities()[i].rhs);
    for (int k = 0; k < sys.eq_count(); ++k)
        if (!sys.equations()[k].rhs.is_zero()) level.emplace_back(mu[k], sys.equations()[k].rhs);
    out.add_ineq(level, gamma);

    return ExtendedFormulation{std::move(out), std::move(u_names)};
}

ExtendedFormulation martin_forest_ef(const Graph& g) {
    auto ne = subgraph_family_ef(g, singleton_family(g));
    auto out = pair_and_restrict(g, ne, rat(-1), RatVector(g.node_count(), rat(-1)));
    SparseTerms total;
    for (const auto& e : g.edges()) total.emplace_back(xvar(e), rat(1));
    out.system.add_eq(total, rat(forest_size(g)));
    return out;
}

LinearSystem edmonds_forest_system(const Graph& g) {
    const int n = g.node_count();
    if (n > 12)
        throw ScaleError("direct forest description enumerates node subsets; limited to 12 "
                         "nodes, got " +
                         std::to_string(n));
    LinearSystem s;
    for (const auto& e : g.edges()) s.add_var(xvar(e));
    for (const auto& e : g.edges()) s.add_ineq({{xvar(e), rat(-1)}}, rat(0));
    for (long mask = 1; mask < (1L << n); ++mask) {
        NodeSet nodes;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) nodes.push_back(v);
        EdgeSet inside = induced_edges(g, nodes);
        if (inside.empty()) continue;
        SparseTerms t;
        for (int e : inside) t.emplace_back(xvar(g.edge(e)), rat(1));
        s.add_ineq(t, rat(static_cast<long>(nodes.size()) - 1));
    }
    SparseTerms total;
    for (const auto& e : g.edges()) total.emplace_back(xvar(e), rat(1));
    s.add_eq(total, rat(forest_size(g)));
    return s;
}

LinearSystem nonempty_outer_description(const Graph& g, int edge_cap) {
    LinearSystem s = subgraph_system(g).system;
    for (const auto& f : enumerate_spanning_forests(g, edge_cap)) {
        SparseTerms t;
        for (int e : f) t.emplace_back(yvar(g.edge(e)), rat(1));
        for (const auto& v : g.node_labels()) t.emplace_back(zvar(v), rat(-1));
        s.add_ineq(t, rat(-1));
    }
    return s;
}

ExtendedFormulation nonempty_ef_from_forest_ef(const Graph& g, const ExtendedFormulation& fef) {
    fef.validate();
    std::vector<std::string> want;
    for (const auto& e : g.edges()) want.push_back(xvar(e));
    if (fef.projection != want)
        throw CompositionError("forest formulation must project onto x[e] in edge order");

    std::vector<std::pair<std::string, Rational>> constants;
    for (const auto& v : g.node_labels()) constants.emplace_back("c[" + v + "]", rat(-1));
    auto q = append_constant_coordinates(fef, constants);

    std::vector<std::string> u_names;
    for (const auto& e : g.edges()) u_names.push_back(yvar(e));
    for (const auto& v : g.node_labels()) u_names.push_back(zvar(v));
    auto polar = polar_dualize(q, rat(-1), std::move(u_names));
    return intersect(subgraph_system(g), polar);
}

ExtendedFormulation count_matroid_ef_restricted(const CountMatroidSpec& spec,
                                                const ExtendedFormulation& ne) {
    const Graph& g = spec.graph;
    for (int v = 0; v < g.node_count(); ++v)
        if (spec.m[v] < spec.ell)
            throw PreconditionError(
                "restricted construction needs m(v) >= l at every node; node '" +
                g.node_label(v) + "' has m = " + std::to_string(spec.m[v]) + " < l = " +
                std::to_string(spec.ell) + "; use the general construction");
    require_subgraph_projection(g, ne, "nonempty-subgraph formulation");

    RatVector node_values;
    for (int v = 0; v < g.node_count(); ++v) node_values.push_back(rat(-spec.m[v]));
    auto out = pair_and_restrict(g, ne, rat(-spec.ell), node_values);
    // the pairing rows cap x(F) by m(S) - l only; the cardinality term of the
    // matroid rank needs the unit bounds (already implied when m(v)+m(w)-l <= 1)
    for (const auto& e : g.edges()) out.system.add_ineq({{xvar(e), rat(1)}}, rat(1));
    return out;
}

ExtendedFormulation count_matroid_ef_general(const CountMatroidSpec& spec) {
    const Graph& g = spec.graph;
    auto base = subgraph_family_ef(g, edge_family(g));
    RatVector node_values;
    for (int v = 0; v < g.node_count(); ++v) node_values.push_back(rat(-spec.m[v]));
    auto out = pair_and_restrict(g, base, rat(-spec.ell), node_values);
    for (const auto& e : g.edges()) out.system.add_ineq({{xvar(e), rat(1)}}, rat(1));
    return out;
}

const std::vector<std::string>& formulation_names() {
    static const std::vector<std::string> names = {
        "subgraph",       "face",           "nonempty-balas",
        "nonempty-outer", "nonempty-from-forest", "forest-martin",
        "forest-edmonds", "count-restricted",     "count-general"};
    return names;
}

ExtendedFormulation build_named_formulation(const std::string& name, const Graph& g,
                                            const std::optional<CountMatroidSpec>& spec,
                                            const NodeSet& face_nodes) {
    if (name == "subgraph") return subgraph_system(g);
    if (name == "face") {
        if (face_nodes.empty()) throw InputError("face needs at least one node");
        return face_system(g, face_nodes);
    }
    if (name == "nonempty-balas") return subgraph_family_ef(g, singleton_family(g));
    if (name == "nonempty-outer") return as_formulation(nonempty_outer_description(g));
    if (name == "nonempty-from-forest") return nonempty_ef_from_forest_ef(g, martin_forest_ef(g));
    if (name == "forest-martin") return martin_forest_ef(g);
    if (name == "forest-edmonds") return as_formulation(edmonds_forest_system(g));
    if (name == "count-restricted" || name == "count-general") {
        if (!spec) throw InputError(name + " needs a count-matroid spec");
        if (name == "count-general") return count_matroid_ef_general(*spec);
        return count_matroid_ef_restricted(*spec, subgraph_family_ef(g, singleton_family(g)));
    }
    throw InputError("unknown formulation '" + name + "'");
}

}  // namespace polyef
