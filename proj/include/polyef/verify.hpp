#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyef/constructions.hpp"
#include "polyef/count_matroid.hpp"

namespace polyef {

struct CheckRecord {
    std::string description;
    bool passed = true;
    std::string witness;  // exact objective / point / counts; empty when passed
};

struct VerificationReport {
    std::string suite;
    unsigned long seed = 0;
    std::vector<CheckRecord> checks;

    int passed_count() const;
    int failed_count() const;
    bool ok() const { return failed_count() == 0; }

    void add(std::string description, bool passed, std::string witness = "");
    void merge(VerificationReport other);
};

struct RunConfig {
    unsigned long seed = 0;
    int trials = 50;
    int enum_cap = 20;                    // 0/1-point and forest enumeration cap
    std::vector<int> forest_ks = {1, 2};  // classes tried by the nash-williams suite
};

enum class SubgraphVertexMode { all, nonempty };

// The (chi(F), chi(S)) vertices over y[e], z[v], F inside E(S); the family
// overload keeps only S containing some member. |V| + |E| <= 20.
VertexSet enumerate_subgraph_vertices(const Graph& g, SubgraphVertexMode mode);
VertexSet enumerate_subgraph_vertices(const Graph& g, const NodeFamily& fam);

// chi(F) vertex sets over x[e].
VertexSet spanning_forest_vertices(const Graph& g, int edge_cap = 20);
VertexSet independent_set_vertices(const CountMatroidSpec& spec);

// Exact LP max of a vs b under `trials` integer objectives in [-10,10]^dim;
// trial t draws from a generator seeded with seed + t, so trial order never
// matters. The vertex-set overload takes the brute-force max on that side.
VerificationReport random_objective_equivalence(const ExtendedFormulation& a,
                                                const ExtendedFormulation& b, int trials,
                                                unsigned long seed);
VerificationReport random_objective_equivalence(const ExtendedFormulation& a, const VertexSet& b,
                                                int trials, unsigned long seed);

// Fixes each point into the projection and asks the remaining system for a
// feasible lift.
VerificationReport lift_feasibility_check(const ExtendedFormulation& ef, const VertexSet& vs);

// Inequality count against the documented exact formula and an explicit
// instantiated bound.
VerificationReport size_audit(const ExtendedFormulation& ef, const std::string& label,
                              long expected, long bound);

// Copy of ef with the rhs of inequality `row` shifted by delta; the harness
// mutation test feeds these back through the equivalence suites.
ExtendedFormulation perturb_inequality_rhs(const ExtendedFormulation& ef, int row,
                                           const Rational& delta);

// thm31, thm32, martin, edmonds-cross, count-restricted, count-general,
// count-cross, nash-williams, matroid-axioms, sizes, all.
const std::vector<std::string>& suite_names();

// Runs one named suite over the graph. Count suites use `spec` and default
// to (1,1)-sparsity; "all" skips the restricted routes when m(v) >= l fails.
VerificationReport run_suite(const std::string& suite, const Graph& g,
                             const std::optional<CountMatroidSpec>& spec, const RunConfig& cfg);

}  // namespace polyef
