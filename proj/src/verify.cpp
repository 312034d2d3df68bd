#include "polyef/verify.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "polyef/errors.hpp"
#include "polyef/simplex.hpp"

namespace polyef {

namespace {

std::string yvar(const Edge& e) { return "y[" + e.id + "]"; }
std::string zvar(const std::string& v) { return "z[" + v + "]"; }
std::string xvar(const Edge& e) { return "x[" + e.id + "]"; }

std::string vec_str(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

std::string edge_set_str(const Graph& g, const EdgeSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += g.edge(f[i]).id;
    }
    return out + "}";
}

RatVector random_objective(int dim, unsigned long seed) {
    std::mt19937_64 rng(seed);
    RatVector c(dim);
    for (auto& v : c) v = rat(static_cast<long>(rng() % 21) - 10);
    return c;
}

std::string describe(const LpResult& r) {
    if (r.status == LpStatus::Optimal) return r.value.str();
    return to_string(r.status);
}

unsigned long mask_of(const EdgeSet& f) {
    unsigned long m = 0;
    for (int e : f) m |= 1ul << e;
    return m;
}

bool eq7_holds(const CountMatroidSpec& spec) {
    return std::all_of(spec.m.begin(), spec.m.end(),
                       [&](long mv) { return mv >= spec.ell; });
}

}  // namespace

int VerificationReport::passed_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
}

int VerificationReport::failed_count() const {
    return static_cast<int>(checks.size()) - passed_count();
}

void VerificationReport::add(std::string description, bool passed, std::string witness) {
    checks.push_back({std::move(description), passed, passed ? "" : std::move(witness)});
}

void VerificationReport::merge(VerificationReport other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

VertexSet enumerate_subgraph_vertices(const Graph& g, SubgraphVertexMode mode) {
    return enumerate_subgraph_vertices(g, mode == SubgraphVertexMode::all
                                              ? NodeFamily{NodeSet{}}
                                              : singleton_family(g));
}

VertexSet enumerate_subgraph_vertices(const Graph& g, const NodeFamily& fam) {
    const int n = g.node_count();
    const int m = g.edge_count();
    if (n + m > 20)
        throw ScaleError("subgraph vertex enumeration limited to |V|+|E| <= 20, got " +
                         std::to_string(n + m));
    VertexSet out;
    for (const auto& e : g.edges()) out.vars.push_back(yvar(e));
    for (const auto& v : g.node_labels()) out.vars.push_back(zvar(v));

    std::vector<unsigned> fam_masks;
    for (const auto& t : fam) {
        unsigned tm = 0;
        for (int v : t) tm |= 1u << v;
        fam_masks.push_back(tm);
    }

    for (unsigned smask = 0; smask < (1u << n); ++smask) {
        bool admitted = std::any_of(fam_masks.begin(), fam_masks.end(),
                                    [&](unsigned tm) { return (smask & tm) == tm; });
        if (!admitted) continue;
        NodeSet nodes;
        for (int v = 0; v < n; ++v)
            if ((smask >> v) & 1) nodes.push_back(v);
        EdgeSet inside = induced_edges(g, nodes);
        const int k = static_cast<int>(inside.size());
        for (unsigned fmask = 0; fmask < (1u << k); ++fmask) {
            RatVector p(m + n, rat(0));
            for (int i = 0; i < k; ++i)
                if ((fmask >> i) & 1) p[inside[i]] = rat(1);
            for (int v : nodes) p[m + v] = rat(1);
            out.points.push_back(std::move(p));
        }
    }
    return out;
}

VertexSet spanning_forest_vertices(const Graph& g, int edge_cap) {
    VertexSet out;
    for (const auto& e : g.edges()) out.vars.push_back(xvar(e));
    for (const auto& f : enumerate_spanning_forests(g, edge_cap)) {
        RatVector p(g.edge_count(), rat(0));
        for (int e : f) p[e] = rat(1);
        out.points.push_back(std::move(p));
    }
    return out;
}

VertexSet independent_set_vertices(const CountMatroidSpec& spec) {
    VertexSet out;
    for (const auto& e : spec.graph.edges()) out.vars.push_back(xvar(e));
    for (const auto& f : enumerate_independent_sets(spec)) {
        RatVector p(spec.graph.edge_count(), rat(0));
        for (int e : f) p[e] = rat(1);
        out.points.push_back(std::move(p));
    }
    return out;
}

VerificationReport random_objective_equivalence(const ExtendedFormulation& a,
                                                const ExtendedFormulation& b, int trials,
                                                unsigned long seed) {
    if (a.projection != b.projection)
        throw CompositionError("equivalence check needs identical projection orderings");
    VerificationReport rep{"objective-equivalence", seed, {}};
    const int dim = static_cast<int>(a.projection.size());
    LpSolver sa(a.system);
    LpSolver sb(b.system);
    auto ia = a.projection_indices();
    auto ib = b.projection_indices();
    for (int t = 0; t < trials; ++t) {
        RatVector c = random_objective(dim, seed + static_cast<unsigned long>(t));
        RatVector fa(a.system.var_count()), fb(b.system.var_count());
        for (int j = 0; j < dim; ++j) {
            fa[ia[j]] = c[j];
            fb[ib[j]] = c[j];
        }
        auto ra = sa.maximize(fa);
        auto rb = sb.maximize(fb);
        bool same = ra.status == rb.status &&
                    (ra.status != LpStatus::Optimal || ra.value == rb.value);
        rep.add("objective trial " + std::to_string(t), same,
                "c = " + vec_str(c) + "; left " + describe(ra) + ", right " + describe(rb));
    }
    return rep;
}

VerificationReport random_objective_equivalence(const ExtendedFormulation& a, const VertexSet& b,
                                                int trials, unsigned long seed) {
    if (a.projection != b.vars)
        throw CompositionError("equivalence check needs identical projection orderings");
    VerificationReport rep{"objective-equivalence", seed, {}};
    if (b.points.empty()) {
        rep.add("vertex set is non-empty", false, "no points to compare against");
        return rep;
    }
    const int dim = static_cast<int>(a.projection.size());
    LpSolver sa(a.system);
    auto ia = a.projection_indices();
    for (int t = 0; t < trials; ++t) {
        RatVector c = random_objective(dim, seed + static_cast<unsigned long>(t));
        RatVector fa(a.system.var_count());
        for (int j = 0; j < dim; ++j) fa[ia[j]] = c[j];
        auto ra = sa.maximize(fa);
        Rational best;
        for (std::size_t p = 0; p < b.points.size(); ++p) {
            Rational dot = rat(0);
            for (int j = 0; j < dim; ++j) dot += c[j] * b.points[p][j];
            if (p == 0 || dot > best) best = dot;
        }
        bool same = ra.status == LpStatus::Optimal && ra.value == best;
        rep.add("objective trial " + std::to_string(t), same,
                "c = " + vec_str(c) + "; formulation " + describe(ra) + ", vertices " +
                    best.str());
    }
    return rep;
}

VerificationReport lift_feasibility_check(const ExtendedFormulation& ef, const VertexSet& vs) {
    if (ef.projection != vs.vars)
        throw CompositionError("lift check needs identical projection orderings");
    VerificationReport rep{"lift-feasibility", 0, {}};
    for (std::size_t i = 0; i < vs.points.size(); ++i) {
        std::vector<std::pair<std::string, Rational>> pin;
        for (std::size_t j = 0; j < vs.vars.size(); ++j)
            pin.emplace_back(vs.vars[j], vs.points[i][j]);
        auto fixed = fix_coordinates(ef, pin);
        bool feasible = is_feasible(fixed.system);
        rep.add("lift vertex " + std::to_string(i), feasible,
                "no feasible lift of " + vec_str(vs.points[i]));
    }
    return rep;
}

VerificationReport size_audit(const ExtendedFormulation& ef, const std::string& label,
                              long expected, long bound) {
    VerificationReport rep{"size-audit", 0, {}};
    const long got = ef.size();
    rep.add(label + ": inequality count equals " + std::to_string(expected), got == expected,
            "counted " + std::to_string(got));
    rep.add(label + ": inequality count within bound " + std::to_string(bound), got <= bound,
            "counted " + std::to_string(got));
    return rep;
}

ExtendedFormulation perturb_inequality_rhs(const ExtendedFormulation& ef, int row,
                                           const Rational& delta) {
    if (row < 0 || row >= ef.system.ineq_count())
        throw InputError("inequality row " + std::to_string(row) + " out of range");
    LinearSystem s(ef.system.variables());
    const auto& ineqs = ef.system.inequalities();
    for (int i = 0; i < ef.system.ineq_count(); ++i)
        s.add_ineq_dense(ineqs[i].coeffs, i == row ? ineqs[i].rhs + delta : ineqs[i].rhs);
    for (const auto& e : ef.system.equations()) s.add_eq_dense(e.coeffs, e.rhs);
    return {std::move(s), ef.projection};
}

namespace {

VerificationReport suite_thm31(const Graph& g, const RunConfig& cfg) {
    VerificationReport rep{"thm31", cfg.seed, {}};
    auto balas = subgraph_family_ef(g, singleton_family(g));
    auto outer = as_formulation(nonempty_outer_description(g, cfg.enum_cap));
    rep.merge(random_objective_equivalence(outer, balas, cfg.trials, cfg.seed));
    auto got = enumerate_01_points(outer, cfg.enum_cap);
    auto want = enumerate_subgraph_vertices(g, SubgraphVertexMode::nonempty);
    rep.add("0/1 points of the outer description equal the nonempty vertex enumeration",
            same_point_set(got, want),
            std::to_string(got.count()) + " points vs " + std::to_string(want.count()));
    return rep;
}

VerificationReport suite_thm32(const Graph& g, const RunConfig& cfg) {
    VerificationReport rep{"thm32", cfg.seed, {}};
    auto mef = martin_forest_ef(g);
    auto via_forest = nonempty_ef_from_forest_ef(g, mef);
    rep.merge(random_objective_equivalence(via_forest, subgraph_family_ef(g, singleton_family(g)),
                                           cfg.trials, cfg.seed));
    rep.merge(random_objective_equivalence(
        via_forest, as_formulation(nonempty_outer_description(g, cfg.enum_cap)), cfg.trials,
        cfg.seed));
    const long expected = subgraph_system(g).size() + mef.size() + 1;
    rep.add("size equals subgraph rows + forest rows + 1", via_forest.size() == expected,
            "counted " + std::to_string(via_forest.size()) + ", expected " +
                std::to_string(expected));
    return rep;
}

VerificationReport suite_martin(const Graph& g, const RunConfig& cfg) {
    VerificationReport rep{"martin", cfg.seed, {}};
    auto mef = martin_forest_ef(g);
    auto forests = spanning_forest_vertices(g, cfg.enum_cap);
    rep.merge(random_objective_equivalence(mef, forests, cfg.trials, cfg.seed));
    rep.merge(lift_feasibility_check(mef, forests));
    return rep;
}

VerificationReport suite_edmonds_cross(const Graph& g, const RunConfig& cfg) {
    VerificationReport rep{"edmonds-cross", cfg.seed, {}};
    rep.merge(random_objective_equivalence(as_formulation(edmonds_forest_system(g)),
                                           martin_forest_ef(g), cfg.trials, cfg.seed));
    return rep;
}

VerificationReport suite_count_restricted(const CountMatroidSpec& spec, const RunConfig& cfg) {
    VerificationReport rep{"count-restricted", cfg.seed, {}};
    auto ne = subgraph_family_ef(spec.graph, singleton_family(spec.graph));
    auto ef = count_matroid_ef_restricted(spec, ne);
    auto vertices = independent_set_vertices(spec);
    rep.merge(random_objective_equivalence(ef, vertices, cfg.trials, cfg.seed));
    rep.merge(lift_feasibility_check(ef, vertices));
    return rep;
}

VerificationReport suite_count_general(const CountMatroidSpec& spec, const RunConfig& cfg) {
    VerificationReport rep{"count-general", cfg.seed, {}};
    auto ef = count_matroid_ef_general(spec);
    auto vertices = independent_set_vertices(spec);
    rep.merge(random_objective_equivalence(ef, vertices, cfg.trials, cfg.seed));
    rep.merge(lift_feasibility_check(ef, vertices));
    return rep;
}

VerificationReport suite_count_cross(const CountMatroidSpec& spec, const RunConfig& cfg) {
    VerificationReport rep{"count-cross", cfg.seed, {}};
    auto ne = subgraph_family_ef(spec.graph, singleton_family(spec.graph));
    rep.merge(random_objective_equivalence(count_matroid_ef_restricted(spec, ne),
                                           count_matroid_ef_general(spec), cfg.trials, cfg.seed));
    return rep;
}

VerificationReport suite_nash_williams(const Graph& g, const RunConfig& cfg) {
    VerificationReport rep{"nash-williams", cfg.seed, {}};
    const int m = g.edge_count();
    if (m > 15)
        throw ScaleError("nash-williams suite enumerates edge subsets; limited to 15 edges");
    for (int k : cfg.forest_ks) {
        auto spec = sparsity_spec(g, k, k);
        bool ok = true;
        std::string witness;
        for (unsigned mask = 0; mask < (1u << m) && ok; ++mask) {
            EdgeSet f;
            for (int e = 0; e < m; ++e)
                if ((mask >> e) & 1) f.push_back(e);
            if (is_independent(spec, f) != partitionable_into_k_forests(g, f, k)) {
                ok = false;
                witness = "edge set " + edge_set_str(g, f) + " at k = " + std::to_string(k);
            }
        }
        rep.add("(" + std::to_string(k) + "," + std::to_string(k) +
                    ")-sparsity coincides with partition into " + std::to_string(k) + " forests",
                ok, witness);
    }
    return rep;
}

VerificationReport suite_matroid_axioms(const CountMatroidSpec& spec, const RunConfig& cfg) {
    VerificationReport rep{"matroid-axioms", cfg.seed, {}};
    auto sets = enumerate_independent_sets(spec);
    std::unordered_set<unsigned long> masks;
    for (const auto& f : sets) masks.insert(mask_of(f));
    const Graph& g = spec.graph;

    bool closed = true;
    std::string cw;
    for (const auto& f : sets) {
        for (std::size_t i = 0; i < f.size() && closed; ++i) {
            EdgeSet sub = f;
            sub.erase(sub.begin() + static_cast<long>(i));
            if (!masks.count(mask_of(sub))) {
                closed = false;
                cw = "independent " + edge_set_str(g, f) + " but not " + edge_set_str(g, sub);
            }
        }
        if (!closed) break;
    }
    rep.add("independence is down-closed", closed, cw);

    bool exchange = true;
    std::string ew;
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            if (a.size() >= b.size()) continue;
            unsigned long am = mask_of(a);
            bool extended = false;
            for (int e : b) {
                if (am & (1ul << e)) continue;
                if (masks.count(am | (1ul << e))) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                exchange = false;
                ew = "no element of " + edge_set_str(g, b) + " extends " + edge_set_str(g, a);
                break;
            }
        }
        if (!exchange) break;
    }
    rep.add("exchange axiom holds on all enumerated pairs", exchange, ew);
    return rep;
}

VerificationReport suite_sizes(const Graph& g, const std::optional<CountMatroidSpec>& spec,
                               const RunConfig& cfg) {
    VerificationReport rep{"sizes", cfg.seed, {}};
    const long n = g.node_count();
    const long m = g.edge_count();
    auto sub = subgraph_system(g);
    rep.merge(size_audit(sub, "subgraph system", 2 * n + 3 * m, 3 * (n + m)));
    auto fam = subgraph_family_ef(g, singleton_family(g));
    rep.merge(size_audit(fam, "singleton-family union", n * (2 * n + 3 * m) + n, 4 * n * (n + m)));
    auto polar = polar_dualize(sub, rat(0));
    rep.merge(size_audit(polar, "polar of the subgraph system", sub.size() + 1, sub.size() + 1));
    auto mef = martin_forest_ef(g);
    rep.merge(size_audit(mef, "forest formulation", fam.size() + m + 1,
                         4 * n * (n + m) + m + 1));
    auto via_forest = nonempty_ef_from_forest_ef(g, mef);
    rep.merge(size_audit(via_forest, "nonempty polytope from forest formulation",
                         sub.size() + mef.size() + 1, sub.size() + mef.size() + 1));
    if (spec && m > 0) {
        if (eq7_holds(*spec)) {
            auto restricted = count_matroid_ef_restricted(*spec, fam);
            rep.merge(size_audit(restricted, "restricted count formulation",
                                 fam.size() + 2 * m + 1, 4 * n * (n + m) + 2 * m + 1));
        }
        auto general = count_matroid_ef_general(*spec);
        rep.merge(size_audit(general, "general count formulation",
                             m * (2 * n + 3 * m) + 3 * m + 1, 5 * m * (n + m)));
    }
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "thm31",         "thm32",       "martin",        "edmonds-cross",
        "count-restricted", "count-general", "count-cross", "nash-williams",
        "matroid-axioms", "sizes",      "all"};
    return names;
}

VerificationReport run_suite(const std::string& suite, const Graph& g,
                             const std::optional<CountMatroidSpec>& spec, const RunConfig& cfg) {
    const CountMatroidSpec effective = spec ? *spec : sparsity_spec(g, 1, 1);
    if (suite == "thm31") return suite_thm31(g, cfg);
    if (suite == "thm32") return suite_thm32(g, cfg);
    if (suite == "martin") return suite_martin(g, cfg);
    if (suite == "edmonds-cross") return suite_edmonds_cross(g, cfg);
    if (suite == "count-restricted") return suite_count_restricted(effective, cfg);
    if (suite == "count-general") return suite_count_general(effective, cfg);
    if (suite == "count-cross") return suite_count_cross(effective, cfg);
    if (suite == "nash-williams") return suite_nash_williams(g, cfg);
    if (suite == "matroid-axioms") return suite_matroid_axioms(effective, cfg);
    if (suite == "sizes") return suite_sizes(g, spec, cfg);
    if (suite == "all") {
        VerificationReport rep{"all", cfg.seed, {}};
        rep.merge(suite_thm31(g, cfg));
        rep.merge(suite_thm32(g, cfg));
        rep.merge(suite_martin(g, cfg));
        rep.merge(suite_edmonds_cross(g, cfg));
        if (eq7_holds(effective)) {
            rep.merge(suite_count_restricted(effective, cfg));
            rep.merge(suite_count_cross(effective, cfg));
        } else {
            rep.add("count-restricted: skipped, m(v) >= l fails for this spec", true);
        }
        rep.merge(suite_count_general(effective, cfg));
        rep.merge(suite_nash_williams(g, cfg));
        rep.merge(suite_matroid_axioms(effective, cfg));
        rep.merge(suite_sizes(g, spec, cfg));
        return rep;
    }
    throw InputError("unknown verification suite '" + suite + "'");
}

}  // namespace polyef
