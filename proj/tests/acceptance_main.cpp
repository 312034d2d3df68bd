// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "polyef/constructions.hpp"
#include "polyef/count_matroid.hpp"
#include "polyef/errors.hpp"
#include "polyef/graph.hpp"
#include "polyef/linear_system.hpp"
#include "polyef/verify.hpp"
#include "test_graphs.hpp"

using namespace polyef;

namespace {

constexpr unsigned long kSeed = 0;
constexpr int kTrials = 50;

struct Outcome {
    bool ok = true;
    std::string note;
};

std::string first_failure(const VerificationReport& r) {
    for (const auto& c : r.checks)
        if (!c.passed) return c.description + (c.witness.empty() ? "" : " [" + c.witness + "]");
    return "no failing check recorded";
}

Outcome fail_on(const std::string& where, const VerificationReport& r) {
    return {false, where + ": " + first_failure(r)};
}

struct NamedSpec {
    std::string name;
    CountMatroidSpec spec;
    bool eq7;  // m(v) >= l at every node
};

std::vector<NamedSpec> thm41_specs() {
    return {{"(1,1) on k3", sparsity_spec(corpus::k3(), 1, 1), true},
            {"(2,2) on k3", sparsity_spec(corpus::k3(), 2, 2), true},
            {"(2,3) on k4", sparsity_spec(corpus::k4(), 2, 3), false},
            {"m=(2,2,3) l=2 on p3", make_count_matroid(corpus::p3(), {2, 2, 3}, 2), true}};
}

std::vector<NamedSpec> thm42_specs() {
    auto specs = thm41_specs();
    specs.push_back({"(1,2) on k3", sparsity_spec(corpus::k3(), 1, 2), false});
    specs.push_back({"(1,2) on c5", sparsity_spec(corpus::c5(), 1, 2), false});
    return specs;
}

ExtendedFormulation restricted_ef(const CountMatroidSpec& spec) {
    return count_matroid_ef_restricted(
        spec, subgraph_family_ef(spec.graph, singleton_family(spec.graph)));
}

Outcome criterion_martin_transfer() {
    for (const auto& [name, g] : corpus::named_graphs()) {
        auto martin = martin_forest_ef(g);
        auto vs = spanning_forest_vertices(g);
        auto rep = random_objective_equivalence(martin, vs, kTrials, kSeed);
        rep.merge(lift_feasibility_check(martin, vs));
        if (!rep.ok()) return fail_on(name, rep);
    }
    return {true, "9 graphs, 50 objectives each, every spanning-forest vector lifts"};
}

Outcome criterion_thm31() {
    for (const auto& [name, g] : corpus::named_graphs()) {
        auto outer = as_formulation(nonempty_outer_description(g));
        auto balas = subgraph_family_ef(g, singleton_family(g));
        auto rep = random_objective_equivalence(outer, balas, kTrials, kSeed);
        if (!rep.ok()) return fail_on(name, rep);
        auto points = enumerate_01_points(outer);
        auto want = enumerate_subgraph_vertices(g, SubgraphVertexMode::nonempty);
        if (!same_point_set(points, want))
            return {false, name + ": 0/1 point set differs from the non-empty vertex list"};
    }
    if (enumerate_subgraph_vertices(corpus::k3(), SubgraphVertexMode::nonempty).count() != 17)
        return {false, "k3 non-empty vertex count is not 17"};
    if (enumerate_subgraph_vertices(corpus::single_edge(), SubgraphVertexMode::nonempty).count() != 4)
        return {false, "single-edge non-empty vertex count is not 4"};
    return {true, "outer = balas route on 9 graphs; vertex sets match (17 on k3, 4 on edge)"};
}

Outcome criterion_thm32() {
    for (const auto& [name, g] : corpus::named_graphs()) {
        auto sub = subgraph_system(g);
        auto martin = martin_forest_ef(g);
        auto composed = nonempty_ef_from_forest_ef(g, martin);
        long want = sub.size() + martin.size() + 1;
        if (composed.size() != want)
            return {false, name + ": size " + std::to_string(composed.size()) + " != " +
                               std::to_string(want)};
        auto outer = as_formulation(nonempty_outer_description(g));
        auto balas = subgraph_family_ef(g, singleton_family(g));
        auto rep = random_objective_equivalence(composed, outer, kTrials, kSeed);
        rep.merge(random_objective_equivalence(composed, balas, kTrials, kSeed));
        if (!rep.ok()) return fail_on(name, rep);
    }
    return {true, "forest route = both thm 3.1 routes on 9 graphs; size = sub + forest + 1"};
}

Outcome criterion_edmonds_cross() {
    for (const auto& [name, g] : corpus::named_graphs()) {
        auto rep = random_objective_equivalence(as_formulation(edmonds_forest_system(g)),
                                                martin_forest_ef(g), kTrials, kSeed);
        if (!rep.ok()) return fail_on(name, rep);
    }
    return {true, "exponential description = forest formulation on 9 graphs"};
}

Outcome criterion_thm41() {
    for (const auto& ns : thm41_specs()) {
        if (!ns.eq7) {
            bool threw = false;
            try {
                restricted_ef(ns.spec);
            } catch (const PreconditionError&) {
                threw = true;
            }
            if (!threw)
                return {false, ns.name + ": restricted construction accepted m(v) < l"};
            continue;
        }
        auto ef = restricted_ef(ns.spec);
        auto vs = independent_set_vertices(ns.spec);
        auto rep = random_objective_equivalence(ef, vs, kTrials, kSeed);
        rep.merge(lift_feasibility_check(ef, vs));
        if (!rep.ok()) return fail_on(ns.name, rep);
    }
    if (rank(sparsity_spec(corpus::k4(), 2, 3), corpus::k4().all_edges()) != 5)
        return {false, "rank of (2,3) on k4 is not 5"};
    if (rank(sparsity_spec(corpus::k3(), 1, 1), corpus::k3().all_edges()) != 2)
        return {false, "rank of (1,1) on k3 is not 2"};
    return {true, "restricted route exact on the m(v) >= l specs; (2,3) on k4 rejected up "
                  "front; ranks 5 and 2"};
}

Outcome criterion_thm42() {
    for (const auto& ns : thm42_specs()) {
        auto general = count_matroid_ef_general(ns.spec);
        auto vs = independent_set_vertices(ns.spec);
        auto rep = random_objective_equivalence(general, vs, kTrials, kSeed);
        rep.merge(lift_feasibility_check(general, vs));
        if (ns.eq7) rep.merge(random_objective_equivalence(restricted_ef(ns.spec), general,
                                                           kTrials, kSeed));
        if (!rep.ok()) return fail_on(ns.name, rep);
    }
    return {true, "general route exact on 6 specs incl. two with m(v) < l; both routes agree"};
}

Outcome criterion_sizes() {
    if (martin_forest_ef(corpus::k3()).size() != 52)
        return {false, "martin_forest_ef(k3) inequality count is not 52"};
    for (const auto& [name, g] : corpus::named_graphs()) {
        auto sub = subgraph_system(g);
        if (polar_dualize(sub, rat(0)).size() != sub.size() + 1)
            return {false, name + ": polar added more than one inequality"};
        if (balas_union({sub, sub}).size() != 2 * sub.size() + 2)
            return {false, name + ": two-block union size is not the sum plus two"};
        long n = g.node_count();
        if (subgraph_family_ef(g, singleton_family(g)).size() != n * sub.size() + n)
            return {false, name + ": singleton union size is not the sum plus block count"};
        RunConfig cfg;
        auto rep = run_suite("sizes", g, sparsity_spec(g, 1, 1), cfg);
        if (!rep.ok()) return fail_on(name, rep);
    }
    return {true, "polar +1, union +blocks, 52 on k3; bounds 3(n+m), 4n(n+m), 4n(n+m)+m+1, "
                  "5m(n+m) hold on 9 graphs"};
}

Outcome criterion_nash_williams() {
    for (const auto& [name, g] : corpus::named_graphs()) {
        for (int k = 1; k <= 2; ++k) {
            auto spec = sparsity_spec(g, k, k);
            for (int mask = 0; mask < (1 << g.edge_count()); ++mask) {
                EdgeSet f;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (mask & (1 << e)) f.push_back(e);
                if (is_independent(spec, f) != partitionable_into_k_forests(g, f, k))
                    return {false, name + ": (" + std::to_string(k) + "," + std::to_string(k) +
                                       ")-independence disagrees with a " + std::to_string(k) +
                                       "-forest partition on a subset"};
            }
        }
    }
    return {true, "(k,k)-independence = decomposition into k forests, k in {1,2}, all subsets"};
}

bool exchange_holds(const CountMatroidSpec& spec) {
    auto sets = enumerate_independent_sets(spec);
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            if (a.size() >= b.size()) continue;
            bool extended = false;
            for (int e : b) {
                if (std::find(a.begin(), a.end(), e) != a.end()) continue;
                EdgeSet grown = a;
                grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
                if (is_independent(spec, grown)) {
                    extended = true;
                    break;
                }
            }
            if (!extended) return false;
        }
    }
    return true;
}

Outcome criterion_exchange() {
    int checked = 0;
    for (const auto& ns : thm42_specs()) {
        if (!exchange_holds(ns.spec)) return {false, ns.name + ": exchange axiom fails"};
        ++checked;
    }
    for (const auto& [name, g] : corpus::named_graphs()) {
        for (int k = 1; k <= 2; ++k) {
            if (!exchange_holds(sparsity_spec(g, k, k)))
                return {false, name + ": exchange axiom fails for (" + std::to_string(k) + "," +
                                   std::to_string(k) + ")"};
            ++checked;
        }
    }
    return {true, "exchange holds exhaustively on " + std::to_string(checked) + " specs"};
}

Outcome criterion_mutation() {
    struct Probe {
        std::string name;
        ExtendedFormulation ef;
        VertexSet vs;
    };
    auto k3 = corpus::k3();
    auto edge = corpus::single_edge();
    std::vector<Probe> probes;
    probes.push_back({"subgraph on single edge", subgraph_system(edge),
                      enumerate_subgraph_vertices(edge, SubgraphVertexMode::all)});
    probes.push_back({"outer nonempty on k3", as_formulation(nonempty_outer_description(k3)),
                      enumerate_subgraph_vertices(k3, SubgraphVertexMode::nonempty)});
    probes.push_back({"forest formulation on k3", martin_forest_ef(k3),
                      spanning_forest_vertices(k3)});
    auto spec11 = sparsity_spec(k3, 1, 1);
    probes.push_back({"general count on k3", count_matroid_ef_general(spec11),
                      independent_set_vertices(spec11)});
    std::string counts;
    for (const auto& probe : probes) {
        int detected = 0;
        for (int row = 0; row < probe.ef.size(); ++row) {
            auto mutant = perturb_inequality_rhs(probe.ef, row, rat(1));
            if (!random_objective_equivalence(mutant, probe.vs, kTrials, kSeed).ok()) ++detected;
        }
        if (detected == 0)
            return {false, probe.name + ": no +1 rhs perturbation was detected in " +
                               std::to_string(kTrials) + " trials"};
        if (!counts.empty()) counts += ", ";
        counts += std::to_string(detected) + "/" + std::to_string(probe.ef.size());
    }
    return {true, "rows caught per formulation: " + counts + " (50 trials each)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"martin transfer", criterion_martin_transfer},
        {"theorem 3.1", criterion_thm31},
        {"theorem 3.2", criterion_thm32},
        {"edmonds cross-check", criterion_edmonds_cross},
        {"theorem 4.1", criterion_thm41},
        {"theorem 4.2", criterion_thm42},
        {"size laws", criterion_sizes},
        {"nash-williams", criterion_nash_williams},
        {"matroid exchange", criterion_exchange},
        {"mutation detection", criterion_mutation},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("unexpected exception: ") + e.what()};
        }
        if (!out.ok) ++failures;
        std::cout << "criterion " << (i + 1 < 10 ? " " : "") << i + 1 << " ["
                  << criteria[i].first << "]: " << (out.ok ? "pass" : "FAIL") << " - "
                  << out.note << "\n";
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
    return 1;
}
