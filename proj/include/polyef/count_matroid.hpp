#pragma once

#include <vector>

#include "polyef/graph.hpp"
#include "polyef/rational.hpp"

namespace polyef {

// Count matroid M_{m,l} on a graph: F is independent iff
// |F ∩ E(S)| <= max(m(S) - l, 0) for every S ⊆ V, where m(S) sums m over S.
struct CountMatroidSpec {
    Graph graph;
    std::vector<long> m;  // per node index, nonnegative
    long ell = 0;
};

// Validated spec; SpecError lists every edge violating m(v) + m(w) >= l.
CountMatroidSpec make_count_matroid(const Graph& g, const std::vector<long>& m, long ell);

// m ≡ k; the edge condition collapses to 2k >= l.
CountMatroidSpec sparsity_spec(const Graph& g, long k, long ell);

// Literal check of the count condition over all S ⊆ V (|V| <= 16).
bool is_independent(const CountMatroidSpec& spec, const EdgeSet& f);

// All independent subsets in increasing bitmask order (|E| <= 20).
std::vector<EdgeSet> enumerate_independent_sets(const CountMatroidSpec& spec);

// Size of a maximal independent subset of f, grown greedily.
int rank(const CountMatroidSpec& spec, const EdgeSet& f);

// Matroid greedy over the positive-weight edges, descending weight, ties by
// edge index.
EdgeSet greedy_max_weight(const CountMatroidSpec& spec, const RatVector& weights);

// Whether f splits into at most k acyclic classes (|f| <= 15).
bool partitionable_into_k_forests(const Graph& g, const EdgeSet& f, int k);

}  // namespace polyef
