#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyef/count_matroid.hpp"
#include "polyef/graph.hpp"
#include "polyef/linear_system.hpp"

namespace polyef {

using NodeFamily = std::vector<NodeSet>;

NodeFamily singleton_family(const Graph& g);
// One endpoint pair per edge; parallel edges contribute duplicates.
NodeFamily edge_family(const Graph& g);

// P_sub(G) over y[e] (edge order) then z[v] (node order): 0 <= z <= 1,
// y >= 0, y_e <= z_v, y_e <= z_w. size = 2|V| + 3|E|.
ExtendedFormulation subgraph_system(const Graph& g);

// Face Q_T of P_sub(G): z_v = 1 pinned by equations for v in t; the
// projection stays the full (y, z) space and the size is unchanged.
ExtendedFormulation face_system(const Graph& g, const NodeSet& t);

// EF of conv(union of blocks): block copies scaled by multipliers
// lam[i] >= 0 summing to 1, coupling x = sum of copies.
// size = sum of block sizes + block count.
ExtendedFormulation balas_union(const std::vector<ExtendedFormulation>& blocks);

// P_sub[fam] = conv(union of Q_T, T in fam) via balas_union.
ExtendedFormulation subgraph_family_ef(const Graph& g, const NodeFamily& fam);

// EF of {u : <u, v> <= gamma for every v in the projection of q}: one
// multiplier lam[i] >= 0 per inequality of q, one free mu[k] per equation,
// transposed-column equations, and the single row <b, lam> + <d, mu> <=
// gamma. New projection variables take u_names when given (one per
// projection variable of q), else u[<name>]. size = size(q) + 1.
ExtendedFormulation polar_dualize(const ExtendedFormulation& q, const Rational& gamma,
                                  std::vector<std::string> u_names = {});

// Spanning forest polytope F(G) over x[e]: pair the nonempty-subgraph
// polytope against (x, -1_V) at level -1, then add x >= 0 and
// x(E) = |V| - nu(G). size = size(P_ne EF) + |E| + 1.
ExtendedFormulation martin_forest_ef(const Graph& g);

// Exponential direct description of F(G): x >= 0, x(E(S)) <= |S| - 1 for
// every S inducing an edge, and x(E) = |V| - nu(G). |V| <= 12.
LinearSystem edmonds_forest_system(const Graph& g);

// P_ne(G) by explicit rows: the subgraph rows plus y(F) - z(V) <= -1 for
// every spanning forest F.
LinearSystem nonempty_outer_description(const Graph& g, int edge_cap = 20);

// P_ne(G) from any EF of F(G) projecting onto x[e]: polar of
// F(G) x {-1_V} at level -1, intersected with P_sub(G).
// size = size(subgraph_system) + size(fef) + 1.
ExtendedFormulation nonempty_ef_from_forest_ef(const Graph& g, const ExtendedFormulation& fef);

// Independence polytope of a count matroid with m(v) >= l at every node:
// pair ne (an EF of P_ne) against (x, -m) at level -l, add 0 <= x <= 1.
// size = size(ne) + 2|E| + 1.
ExtendedFormulation count_matroid_ef_restricted(const CountMatroidSpec& spec,
                                                const ExtendedFormulation& ne);

// Independence polytope of any count matroid: pair the edge-family polytope
// P_sub[E] against (x, -m) at level -l, add 0 <= x <= 1.
// size = sum of face sizes + 3|E| + 1.
ExtendedFormulation count_matroid_ef_general(const CountMatroidSpec& spec);

// Catalog used by the command-line surface and the bindings: subgraph, face,
// nonempty-balas, nonempty-outer, nonempty-from-forest, forest-martin,
// forest-edmonds, count-restricted, count-general.
const std::vector<std::string>& formulation_names();

// face needs `face_nodes`; count-restricted / count-general need `spec`.
ExtendedFormulation build_named_formulation(const std::string& name, const Graph& g,
                                            const std::optional<CountMatroidSpec>& spec = {},
                                            const NodeSet& face_nodes = {});

}  // namespace polyef
