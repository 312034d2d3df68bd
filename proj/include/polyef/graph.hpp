#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "polyef/rational.hpp"

namespace polyef {

// Sorted, duplicate-free lists of node / edge indices into a host graph.
using NodeSet = std::vector<int>;
using EdgeSet = std::vector<int>;

struct Edge {
    std::string id;
    int u;
    int v;
};

// Undirected multigraph with labeled nodes and edges. No loops; parallel
// edges allowed. Immutable after construction.
class Graph {
public:
    // edge_list entries: (edge id, endpoint label, endpoint label).
    Graph(std::vector<std::string> node_labels,
          const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list);

    // Integer interchange form: nodes "0".."n-1", edge ids "e0", "e1", ...
    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& node_label(int i) const { return nodes_.at(i); }
    const Edge& edge(int i) const { return edges_.at(i); }
    const std::vector<std::string>& node_labels() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int node_index(const std::string& label) const;  // InputError if unknown
    int edge_index(const std::string& id) const;

    NodeSet node_set(const std::vector<std::string>& labels) const;
    EdgeSet edge_set(const std::vector<std::string>& ids) const;
    NodeSet all_nodes() const;
    EdgeSet all_edges() const;

    NodeSet endpoints(int edge_idx) const;

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
};

struct Components {
    std::vector<int> component_of;  // per node, ids 0..count-1 in first-seen order
    int count = 0;
};

// Edges with both endnodes in S.
EdgeSet induced_edges(const Graph& g, const NodeSet& s);

// Components of (V, E); count is nu(G).
Components connected_components(const Graph& g);

// Components of (V, F) for an edge subset F.
Components connected_components(const Graph& g, const EdgeSet& f);

bool is_forest(const Graph& g, const EdgeSet& f);

// All acyclic edge subsets, the empty set included. Listed in increasing
// bitmask order (bit i = edge i). Throws ScaleError past the cap.
std::vector<EdgeSet> enumerate_forests(const Graph& g, int edge_cap = 20);

// Forests with the same connected components as G; each such forest has
// exactly |V| - nu(G) edges.
std::vector<EdgeSet> enumerate_spanning_forests(const Graph& g, int edge_cap = 20);

// Greedy by descending weight, skipping cycle-creating edges; ties broken
// by edge index so the output is deterministic.
EdgeSet kruskal_max_weight_spanning_forest(const Graph& g, const RatVector& weights);

Rational edge_set_weight(const EdgeSet& f, const RatVector& weights);

}  // namespace polyef
