#include "polyef/count_matroid.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "polyef/errors.hpp"

namespace polyef {

namespace {

void check_edge_set(const Graph& g, const EdgeSet& f) {
    int prev = -1;
    for (int e : f) {
        if (e < 0 || e >= g.edge_count())
            throw InputError("edge index " + std::to_string(e) + " out of range");
        if (e <= prev) throw InputError("edge set must be strictly increasing");
        prev = e;
    }
}

}  // namespace

CountMatroidSpec make_count_matroid(const Graph& g, const std::vector<long>& m, long ell) {
    if (static_cast<int>(m.size()) != g.node_count())
        throw DimensionError("m assigns " + std::to_string(m.size()) + " values to " +
                             std::to_string(g.node_count()) + " nodes");
    for (int v = 0; v < g.node_count(); ++v)
        if (m[v] < 0)
            throw InputError("m must be nonnegative; node '" + g.node_label(v) + "' has " +
                             std::to_string(m[v]));
    std::string bad;
    for (const auto& e : g.edges()) {
        if (m[e.u] + m[e.v] >= ell) continue;
        if (!bad.empty()) bad += ", ";
        bad += e.id + " (" + std::to_string(m[e.u]) + "+" + std::to_string(m[e.v]) + " < " +
               std::to_string(ell) + ")";
    }
    if (!bad.empty())
        throw SpecError("count condition m(v) + m(w) >= l fails on edges: " + bad);
    return CountMatroidSpec{g, m, ell};
}

CountMatroidSpec sparsity_spec(const Graph& g, long k, long ell) {
    if (k < 0) throw InputError("sparsity parameter k must be nonnegative");
    if (2 * k < ell)
        throw SpecError("count condition m(v) + m(w) >= l fails for uniform m = " +
                        std::to_string(k) + ": 2k = " + std::to_string(2 * k) + " < " +
                        std::to_string(ell));
    return make_count_matroid(g, std::vector<long>(g.node_count(), k), ell);
}

bool is_independent(const CountMatroidSpec& spec, const EdgeSet& f) {
    const Graph& g = spec.graph;
    const int n = g.node_count();
    if (n > 16)
        throw ScaleError("independence check enumerates node subsets; limited to 16 nodes");
    check_edge_set(g, f);

    std::vector<unsigned> span;
    span.reserve(f.size());
    for (int e : f) span.push_back((1u << g.edge(e).u) | (1u << g.edge(e).v));

    for (unsigned s = 1; s < (1u << n); ++s) {
        long ms = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) ms += spec.m[v];
        long cap = std::max(ms - spec.ell, 0L);
        long inside = 0;
        for (unsigned mask : span)
            if ((mask & s) == mask) ++inside;
        if (inside > cap) return false;
    }
    return true;
}

std::vector<EdgeSet> enumerate_independent_sets(const CountMatroidSpec& spec) {
    const int m = spec.graph.edge_count();
    if (m > 20)
        throw ScaleError("independent-set enumeration limited to 20 edges, got " +
                         std::to_string(m));
    std::vector<EdgeSet> out;
    for (long mask = 0; mask < (1L << m); ++mask) {
        EdgeSet f;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) f.push_back(e);
        if (is_independent(spec, f)) out.push_back(std::move(f));
    }
    return out;
}

int rank(const CountMatroidSpec& spec, const EdgeSet& f) {
    check_edge_set(spec.graph, f);
    EdgeSet grown;
    for (int e : f) {
        grown.push_back(e);
        if (!is_independent(spec, grown)) grown.pop_back();
    }
    return static_cast<int>(grown.size());
}

EdgeSet greedy_max_weight(const CountMatroidSpec& spec, const RatVector& weights) {
    const Graph& g = spec.graph;
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw DimensionError("one weight per edge required");
    std::vector<int> order;
    for (int e = 0; e < g.edge_count(); ++e)
        if (weights[e] > rat(0)) order.push_back(e);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] > weights[b]; });

    EdgeSet chosen;
    for (int e : order) {
        EdgeSet trial = chosen;
        trial.insert(std::lower_bound(trial.begin(), trial.end(), e), e);
        if (is_independent(spec, trial)) chosen = std::move(trial);
    }
    return chosen;
}

bool partitionable_into_k_forests(const Graph& g, const EdgeSet& f, int k) {
    if (static_cast<int>(f.size()) > 15)
        throw ScaleError("forest-partition search limited to 15 edges, got " +
                         std::to_string(f.size()));
    if (k < 0) throw InputError("negative number of forest classes");
    check_edge_set(g, f);
    if (f.empty()) return true;
    if (k == 0) return false;

    std::vector<EdgeSet> classes;
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == f.size()) return true;
        const std::size_t open = classes.size();
        for (std::size_t c = 0; c < open; ++c) {
            classes[c].push_back(f[i]);
            if (is_forest(g, classes[c]) && place(i + 1)) return true;
            classes[c].pop_back();
        }
        if (static_cast<int>(open) < k) {
            classes.push_back({f[i]});
            if (place(i + 1)) return true;
            classes.pop_back();
        }
        return false;
    };
    return place(0);
}

}  // namespace polyef
