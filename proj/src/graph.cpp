#include "polyef/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polyef {

namespace {

// Minimal union-find for cycle checks and component counting.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[std::max(rx, ry)] = std::min(rx, ry);
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Graph::Graph(std::vector<std::string> node_labels,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list)
    : nodes_(std::move(node_labels)) {
    std::map<std::string, int> node_index;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        if (nodes_[i].empty()) throw InputError("empty node label");
        if (!node_index.emplace(nodes_[i], i).second)
            throw InputError("duplicate node label '" + nodes_[i] + "'");
    }
    std::set<std::string> edge_ids;
    edges_.reserve(edge_list.size());
    for (const auto& [id, a, b] : edge_list) {
        if (id.empty()) throw InputError("empty edge id");
        if (!edge_ids.insert(id).second) throw InputError("duplicate edge id '" + id + "'");
        auto ia = node_index.find(a);
        auto ib = node_index.find(b);
        if (ia == node_index.end()) throw InputError("edge '" + id + "' references unknown node '" + a + "'");
        if (ib == node_index.end()) throw InputError("edge '" + id + "' references unknown node '" + b + "'");
        if (ia->second == ib->second)
            throw InputError("loop edge '" + id + "' at node '" + a + "' is not allowed");
        edges_.push_back(Edge{id, ia->second, ib->second});
    }
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw InputError("negative node count");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> edge_list;
    edge_list.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [u, v] = pairs[k];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        edge_list.emplace_back("e" + std::to_string(k), labels[u], labels[v]);
    }
    return Graph(std::move(labels), edge_list);
}

int Graph::node_index(const std::string& label) const {
    for (int i = 0; i < node_count(); ++i)
        if (nodes_[i] == label) return i;
    throw InputError("unknown node '" + label + "'");
}

int Graph::edge_index(const std::string& id) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].id == id) return i;
    throw InputError("unknown edge '" + id + "'");
}

NodeSet Graph::node_set(const std::vector<std::string>& labels) const {
    NodeSet s;
    s.reserve(labels.size());
    for (const auto& l : labels) s.push_back(node_index(l));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

EdgeSet Graph::edge_set(const std::vector<std::string>& ids) const {
    EdgeSet s;
    s.reserve(ids.size());
    for (const auto& id : ids) s.push_back(edge_index(id));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

NodeSet Graph::all_nodes() const {
    NodeSet s(node_count());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

EdgeSet Graph::all_edges() const {
    EdgeSet s(edge_count());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

NodeSet Graph::endpoints(int edge_idx) const {
    const Edge& e = edge(edge_idx);
    NodeSet s{e.u, e.v};
    std::sort(s.begin(), s.end());
    return s;
}

EdgeSet induced_edges(const Graph& g, const NodeSet& s) {
    std::vector<char> in(g.node_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.node_count())
            throw InputError("node index " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    EdgeSet out;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (in[e.u] && in[e.v]) out.push_back(i);
    }
    return out;
}

Components connected_components(const Graph& g) {
    return connected_components(g, g.all_edges());
}

Components connected_components(const Graph& g, const EdgeSet& f) {
    DisjointSets ds(g.node_count());
    for (int i : f) {
        const Edge& e = g.edge(i);
        ds.unite(e.u, e.v);
    }
    Components c;
    c.component_of.assign(g.node_count(), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        int r = ds.find(v);
        if (c.component_of[r] < 0) c.component_of[r] = c.count++;
        c.component_of[v] = c.component_of[r];
    }
    return c;
}

bool is_forest(const Graph& g, const EdgeSet& f) {
    DisjointSets ds(g.node_count());
    for (int i : f) {
        const Edge& e = g.edge(i);
        if (!ds.unite(e.u, e.v)) return false;
    }
    return true;
}

namespace {

void check_edge_cap(const Graph& g, int edge_cap) {
    if (g.edge_count() > edge_cap)
        throw ScaleError("graph has " + std::to_string(g.edge_count()) +
                         " edges, enumeration cap is " + std::to_string(edge_cap));
}

EdgeSet edges_of_mask(unsigned mask, int m) {
    EdgeSet f;
    for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) f.push_back(i);
    return f;
}

}  // namespace

std::vector<EdgeSet> enumerate_forests(const Graph& g, int edge_cap) {
    check_edge_cap(g, edge_cap);
    int m = g.edge_count();
    std::vector<EdgeSet> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        EdgeSet f = edges_of_mask(mask, m);
        if (is_forest(g, f)) out.push_back(std::move(f));
    }
    return out;
}

std::vector<EdgeSet> enumerate_spanning_forests(const Graph& g, int edge_cap) {
    check_edge_cap(g, edge_cap);
    int m = g.edge_count();
    // A forest spans the components of G exactly when it has |V| - nu(G) edges.
    int want = g.node_count() - connected_components(g).count;
    std::vector<EdgeSet> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        EdgeSet f = edges_of_mask(mask, m);
        if (static_cast<int>(f.size()) == want && is_forest(g, f)) out.push_back(std::move(f));
    }
    return out;
}

EdgeSet kruskal_max_weight_spanning_forest(const Graph& g, const RatVector& weights) {
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw DimensionError("weight vector length " + std::to_string(weights.size()) +
                             " does not match edge count " + std::to_string(g.edge_count()));
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] > weights[b]; });
    DisjointSets ds(g.node_count());
    EdgeSet forest;
    for (int i : order) {
        const Edge& e = g.edge(i);
        if (ds.unite(e.u, e.v)) forest.push_back(i);
    }
    std::sort(forest.begin(), forest.end());
    return forest;
}

Rational edge_set_weight(const EdgeSet& f, const RatVector& weights) {
    Rational w;
    for (int i : f) w += weights.at(i);
    return w;
}

}  // namespace polyef
