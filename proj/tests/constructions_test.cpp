#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "polyef/constructions.hpp"
#include "polyef/simplex.hpp"
#include "test_graphs.hpp"

using namespace polyef;

namespace {

Rational lp_max(const ExtendedFormulation& e, const std::vector<long>& c) {
    RatVector obj;
    for (long v : c) obj.push_back(rat(v));
    auto r = solve_max_projected(e, obj);
    REQUIRE(r.status == LpStatus::Optimal);
    return r.value;
}

// Positional projection match under seeded integer objectives in [-10, 10].
void check_lp_equivalent(const ExtendedFormulation& a, const ExtendedFormulation& b, int trials,
                         unsigned seed) {
    REQUIRE(a.projection.size() == b.projection.size());
    LpSolver sa(a.system);
    LpSolver sb(b.system);
    auto ia = a.projection_indices();
    auto ib = b.projection_indices();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        RatVector ca(a.system.var_count()), cb(b.system.var_count());
        for (std::size_t p = 0; p < ia.size(); ++p) {
            Rational v = rat(static_cast<long>(rng() % 21) - 10);
            ca[ia[p]] = v;
            cb[ib[p]] = v;
        }
        auto ra = sa.maximize(ca);
        auto rb = sb.maximize(cb);
        REQUIRE(ra.status == LpStatus::Optimal);
        REQUIRE(rb.status == LpStatus::Optimal);
        CHECK(ra.value == rb.value);
    }
}

VertexSet subgraph_points_oracle(const Graph& g) {
    // (χ(F), χ(S)) for F ⊆ E(S), S ⊆ V, straight from the definition
    VertexSet vs;
    for (const auto& e : g.edges()) vs.vars.push_back("y[" + e.id + "]");
    for (const auto& v : g.node_labels()) vs.vars.push_back("z[" + v + "]");
    const int n = g.node_count(), m = g.edge_count();
    for (long smask = 0; smask < (1L << n); ++smask) {
        NodeSet nodes;
        for (int v = 0; v < n; ++v)
            if ((smask >> v) & 1) nodes.push_back(v);
        EdgeSet inside = induced_edges(g, nodes);
        for (long pick = 0; pick < (1L << inside.size()); ++pick) {
            RatVector p(m + n);
            for (std::size_t i = 0; i < inside.size(); ++i)
                if ((pick >> i) & 1) p[inside[i]] = rat(1);
            for (int v = 0; v < n; ++v)
                if ((smask >> v) & 1) p[m + v] = rat(1);
            vs.points.push_back(std::move(p));
        }
    }
    return vs;
}

Rational brute_max_over_sets(const std::vector<EdgeSet>& sets, const RatVector& c) {
    REQUIRE(!sets.empty());
    bool first = true;
    Rational best;
    for (const auto& f : sets) {
        Rational v;
        for (int e : f) v += c[e];
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

ExtendedFormulation point_block(const std::string& var, long value) {
    LinearSystem s({var});
    s.add_eq({{var, rat(1)}}, rat(value));
    return as_formulation(std::move(s));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("subgraph system shape and points") {
    auto edge = subgraph_system(corpus::single_edge());
    CHECK(edge.size() == 7);
    CHECK(edge.system.eq_count() == 0);
    CHECK(edge.projection == std::vector<std::string>{"y[ab]", "z[a]", "z[b]"});
    CHECK(enumerate_01_points(edge).count() == 5);

    auto k3 = subgraph_system(corpus::k3());
    CHECK(k3.size() == 15);
    CHECK(enumerate_01_points(k3).count() == 18);

    // the origin is a subgraph point (empty subgraph)
    CHECK(k3.system.satisfies(RatVector(6)));
}

TEST_CASE("subgraph points match the definitional oracle on the corpus") {
    for (const auto& g : corpus::all_graphs()) {
        if (g.node_count() + g.edge_count() > 12) continue;
        auto e = subgraph_system(g);
        CHECK(same_point_set(enumerate_01_points(e), subgraph_points_oracle(g)));
    }
}

TEST_CASE("subgraph point count is the subset-sum formula") {
    for (const auto& g : corpus::all_graphs()) {
        if (g.node_count() + g.edge_count() > 14) continue;
        long expect = 0;
        for (long smask = 0; smask < (1L << g.node_count()); ++smask) {
            NodeSet nodes;
            for (int v = 0; v < g.node_count(); ++v)
                if ((smask >> v) & 1) nodes.push_back(v);
            expect += 1L << induced_edges(g, nodes).size();
        }
        CHECK(enumerate_01_points(subgraph_system(g)).count() == expect);
    }
}

TEST_CASE("face system pins nodes") {
    auto g = corpus::single_edge();
    auto qa = face_system(g, {0});
    CHECK(qa.size() == 7);
    CHECK(qa.system.eq_count() == 1);
    auto pts = enumerate_01_points(qa);
    VertexSet expect{{"y[ab]", "z[a]", "z[b]"},
                     {{rat(0), rat(1), rat(0)}, {rat(0), rat(1), rat(1)}, {rat(1), rat(1), rat(1)}}};
    CHECK(same_point_set(pts, expect));

    auto k3 = corpus::k3();
    CHECK(enumerate_01_points(face_system(k3, {0, 1, 2})).count() == 8);

    CHECK_THROWS_AS(face_system(k3, {}), InputError);
    CHECK_THROWS_AS(face_system(k3, {3}), InputError);
    CHECK_THROWS_AS(face_system(k3, {1, 1}), InputError);
}

TEST_CASE("balas union of two points is a segment") {
    auto u = balas_union({point_block("t", 0), point_block("t", 1)});
    CHECK(u.size() == 2);  // two lam >= 0 rows
    CHECK(u.projection == std::vector<std::string>{"t"});
    CHECK(u.system.has_var("blk0.t"));
    CHECK(u.system.has_var("lam[1]"));
    CHECK(lp_max(u, {1}) == rat(1));
    CHECK(lp_max(u, {-1}) == rat(0));
    auto pts = enumerate_01_points(u);
    CHECK(pts.count() == 2);
}

TEST_CASE("balas union validates its blocks") {
    CHECK_THROWS_AS(balas_union({}), InputError);

    auto a = point_block("t", 0);
    auto b = point_block("s", 0);
    CHECK_THROWS_AS(balas_union({a, b}), CompositionError);

    LinearSystem empty_sys({"t"});
    empty_sys.add_ineq({{"t", rat(1)}}, rat(-1));
    empty_sys.add_ineq({{"t", rat(-1)}}, rat(0));
    CHECK_THROWS_AS(balas_union({a, as_formulation(std::move(empty_sys))}), ConstructionError);
}

TEST_CASE("nonempty subgraph polytope of a single edge") {
    auto g = corpus::single_edge();
    auto ne = subgraph_family_ef(g, singleton_family(g));
    CHECK(ne.size() == 2 * 7 + 2);
    auto pts = enumerate_01_points(ne);
    VertexSet expect{{"y[ab]", "z[a]", "z[b]"},
                     {{rat(0), rat(1), rat(0)},
                      {rat(0), rat(0), rat(1)},
                      {rat(0), rat(1), rat(1)},
                      {rat(1), rat(1), rat(1)}}};
    CHECK(same_point_set(pts, expect));
    CHECK(lp_max(ne, {1, 1, 1}) == rat(3));
    CHECK(lp_max(ne, {0, -1, -1}) == rat(-1));  // z(V) >= 1 away from the origin
}

TEST_CASE("family formulations at derived sizes and point counts") {
    auto g = corpus::single_edge();
    auto qab = subgraph_family_ef(g, {{0, 1}});
    CHECK(enumerate_01_points(qab).count() == 2);

    auto k3 = corpus::k3();
    CHECK(subgraph_family_ef(k3, singleton_family(k3)).size() == 48);
    auto psub_e = subgraph_family_ef(k3, edge_family(k3));
    CHECK(psub_e.size() == 3 * 15 + 3);
    CHECK(enumerate_01_points(psub_e).count() == 14);

    CHECK_THROWS_AS(subgraph_family_ef(k3, {}), InputError);
}

TEST_CASE("polar of a point is a halfspace") {
    auto q = point_block("t", 1);
    auto p = polar_dualize(q, rat(2));
    CHECK(p.size() == 1);  // size law with size(q) = 0
    CHECK(p.projection == std::vector<std::string>{"u[t]"});
    auto r = solve_max_projected(p, {rat(1)});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == rat(2));
    CHECK(solve_max_projected(p, {rat(-1)}).status == LpStatus::Unbounded);
}

TEST_CASE("polar of the unit interval") {
    LinearSystem seg({"t"});
    seg.add_ineq({{"t", rat(1)}}, rat(1));
    seg.add_ineq({{"t", rat(-1)}}, rat(0));
    auto p = polar_dualize(as_formulation(std::move(seg)), rat(1));
    CHECK(p.size() == 3);
    for (long cand : {-5L, 0L, 1L, 2L}) {
        LinearSystem probe = p.system;
        probe.add_eq({{"u[t]", rat(1)}}, rat(cand));
        CHECK(is_feasible(probe) == (cand <= 1));
    }
}

TEST_CASE("polar of a simplex is a box") {
    LinearSystem simplex({"t0", "t1"});
    simplex.add_ineq({{"t0", rat(-1)}}, rat(0));
    simplex.add_ineq({{"t1", rat(-1)}}, rat(0));
    simplex.add_eq({{"t0", rat(1)}, {"t1", rat(1)}}, rat(1));
    auto p = polar_dualize(as_formulation(std::move(simplex)), rat(1));
    CHECK(p.size() == 3);

    LinearSystem box({"u[t0]", "u[t1]"});
    box.add_ineq({{"u[t0]", rat(1)}}, rat(1));
    box.add_ineq({{"u[t1]", rat(1)}}, rat(1));
    // box directions with a bounded max over both systems
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        RatVector c{rat(-static_cast<long>(rng() % 10) - 1), rat(-static_cast<long>(rng() % 10) - 1)};
        if (t % 3 == 0) c[t % 2] = -c[t % 2];
        auto a = solve_max_projected(p, c);
        auto b = solve_max(box, c);
        REQUIRE(a.status == b.status);
        if (a.status == LpStatus::Optimal) CHECK(a.value == b.value);
    }
}

TEST_CASE("polar rejects bad input") {
    LinearSystem empty_sys({"t"});
    empty_sys.add_ineq({{"t", rat(1)}}, rat(-1));
    empty_sys.add_ineq({{"t", rat(-1)}}, rat(0));
    CHECK_THROWS_AS(polar_dualize(as_formulation(std::move(empty_sys)), rat(0)),
                    ConstructionError);
    CHECK_THROWS_AS(polar_dualize(point_block("t", 1), rat(1), {"a", "b"}), CompositionError);
}

TEST_CASE("forest polytope of a path is a point") {
    auto e = martin_forest_ef(corpus::p3());
    CHECK(lp_max(e, {1, 1}) == rat(2));
    CHECK(lp_max(e, {-1, -1}) == rat(-2));
    auto pts = enumerate_01_points(e);
    REQUIRE(pts.count() == 1);
    CHECK(pts.points[0] == RatVector{rat(1), rat(1)});
}

TEST_CASE("forest polytope of K3") {
    auto e = martin_forest_ef(corpus::k3());
    CHECK(e.size() == 48 + 3 + 1);
    CHECK(e.projection == std::vector<std::string>{"x[ab]", "x[ac]", "x[bc]"});
    CHECK(lp_max(e, {1, 1, 1}) == rat(2));
    CHECK(lp_max(e, {3, 2, 1}) == rat(5));

    // every spanning forest lifts into the formulation
    auto g = corpus::k3();
    for (const auto& f : enumerate_spanning_forests(g)) {
        std::vector<std::pair<std::string, Rational>> pin;
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            bool in = std::find(f.begin(), f.end(), ei) != f.end();
            pin.emplace_back("x[" + g.edge(ei).id + "]", in ? rat(1) : rat(0));
        }
        CHECK(is_feasible(fix_coordinates(e, pin).system));
    }
}

TEST_CASE("forest polytope sizes follow the additive law") {
    auto edge = martin_forest_ef(corpus::single_edge());
    CHECK(edge.size() == 16 + 1 + 1);
    auto pts = enumerate_01_points(edge);
    REQUIRE(pts.count() == 1);
    CHECK(pts.points[0] == RatVector{rat(1)});

    CHECK(martin_forest_ef(corpus::star()).size() == (4 * 17 + 4) + 3 + 1);
}

TEST_CASE("direct forest description of K3") {
    auto s = edmonds_forest_system(corpus::k3());
    CHECK(s.var_count() == 3);
    CHECK(s.ineq_count() == 3 + 3 + 1);
    CHECK(s.eq_count() == 1);
    CHECK(s.equations()[0].rhs == rat(2));
    // the three pair rows cap single edges at 1, the full set at 2
    CHECK(s.inequalities()[3].rhs == rat(1));
    CHECK(s.inequalities()[6].rhs == rat(2));
}

TEST_CASE("direct forest description of a single edge is one point") {
    auto s = edmonds_forest_system(corpus::single_edge());
    CHECK(is_feasible(s));
    auto r = solve_max(s, {rat(1)});
    CHECK(r.value == rat(1));
    CHECK(solve_max(s, {rat(-1)}).value == rat(-1));
}

TEST_CASE("direct forest description enforces its node cap") {
    std::vector<std::pair<int, int>> spokes;
    for (int i = 1; i < 13; ++i) spokes.emplace_back(0, i);
    CHECK_THROWS_AS(edmonds_forest_system(Graph::from_pairs(13, spokes)), ScaleError);
}

TEST_CASE("forest formulations agree under random objectives") {
    for (const auto& g : {corpus::k3(), corpus::p3(), corpus::tri_parallel()}) {
        auto martin = martin_forest_ef(g);
        auto edmonds = as_formulation(edmonds_forest_system(g));
        check_lp_equivalent(martin, edmonds, 10, 7u);

        auto spanning = enumerate_spanning_forests(g);
        std::mt19937_64 rng(17);
        LpSolver solver(martin.system);
        auto idx = martin.projection_indices();
        for (int t = 0; t < 10; ++t) {
            RatVector c(g.edge_count());
            for (auto& v : c) v = rat(static_cast<long>(rng() % 21) - 10);
            RatVector full(martin.system.var_count());
            for (std::size_t p = 0; p < idx.size(); ++p) full[idx[p]] = c[p];
            auto r = solver.maximize(full);
            REQUIRE(r.status == LpStatus::Optimal);
            CHECK(r.value == brute_max_over_sets(spanning, c));
        }
    }
}

TEST_CASE("outer description of the nonempty-subgraph polytope") {
    auto edge = nonempty_outer_description(corpus::single_edge());
    CHECK(edge.ineq_count() == 8);
    CHECK(enumerate_01_points(edge, edge.variables()).count() == 4);
    CHECK(!edge.satisfies(RatVector(3)));

    auto k3 = nonempty_outer_description(corpus::k3());
    CHECK(k3.ineq_count() == 15 + 3);
    CHECK(enumerate_01_points(k3, k3.variables()).count() == 17);
    CHECK(!k3.satisfies(RatVector(6)));

    auto balas = subgraph_family_ef(corpus::k3(), singleton_family(corpus::k3()));
    check_lp_equivalent(as_formulation(k3), balas, 20, 11u);
}

TEST_CASE("nonempty polytope from a forest formulation") {
    auto g = corpus::single_edge();
    auto viaforest = nonempty_ef_from_forest_ef(g, martin_forest_ef(g));
    CHECK(viaforest.size() == 7 + 18 + 1);
    auto pts = enumerate_01_points(viaforest);
    CHECK(same_point_set(pts, enumerate_01_points(subgraph_family_ef(g, singleton_family(g)))));

    auto k3 = corpus::k3();
    auto thm32 = nonempty_ef_from_forest_ef(k3, martin_forest_ef(k3));
    CHECK(thm32.size() == 15 + 52 + 1);
    check_lp_equivalent(thm32, as_formulation(nonempty_outer_description(k3)), 15, 23u);

    CHECK_THROWS_AS(nonempty_ef_from_forest_ef(k3, subgraph_system(k3)), CompositionError);
}

TEST_CASE("restricted count-matroid formulation") {
    auto k3 = corpus::k3();
    auto ne = subgraph_family_ef(k3, singleton_family(k3));

    auto graphic = count_matroid_ef_restricted(sparsity_spec(k3, 1, 1), ne);
    CHECK(graphic.size() == 48 + 2 * 3 + 1);
    CHECK(graphic.projection == std::vector<std::string>{"x[ab]", "x[ac]", "x[bc]"});
    CHECK(lp_max(graphic, {1, 1, 1}) == rat(2));

    // without the unit bounds the pairing rows would allow x[ab] = 2 here
    auto loose = count_matroid_ef_restricted(sparsity_spec(k3, 2, 2), ne);
    CHECK(lp_max(loose, {1, 1, 1}) == rat(3));
    CHECK(lp_max(loose, {1, 0, 0}) == rat(1));

    auto k4 = corpus::k4();
    auto ne4 = subgraph_family_ef(k4, singleton_family(k4));
    CHECK_THROWS_AS(count_matroid_ef_restricted(sparsity_spec(k4, 2, 3), ne4),
                    PreconditionError);
    CHECK_THROWS_AS(count_matroid_ef_restricted(sparsity_spec(k3, 1, 1), graphic),
                    CompositionError);
}

TEST_CASE("general count-matroid formulation") {
    auto k4 = corpus::k4();
    auto rigidity = count_matroid_ef_general(sparsity_spec(k4, 2, 3));
    CHECK(rigidity.size() == 6 * 26 + 6 + 2 * 6 + 1);
    CHECK(lp_max(rigidity, {1, 1, 1, 1, 1, 1}) == rat(5));

    auto k3 = corpus::k3();
    auto spec12 = sparsity_spec(k3, 1, 2);  // fails m(v) >= l, general still applies
    auto general12 = count_matroid_ef_general(spec12);
    auto sets = enumerate_independent_sets(spec12);
    std::mt19937_64 rng(41);
    LpSolver solver(general12.system);
    auto idx = general12.projection_indices();
    for (int t = 0; t < 20; ++t) {
        RatVector c(k3.edge_count());
        for (auto& v : c) v = rat(static_cast<long>(rng() % 21) - 10);
        RatVector full(general12.system.var_count());
        for (std::size_t p = 0; p < idx.size(); ++p) full[idx[p]] = c[p];
        auto r = solver.maximize(full);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == brute_max_over_sets(sets, c));
    }
}

TEST_CASE("restricted and general routes coincide when both apply") {
    auto k3 = corpus::k3();
    auto ne = subgraph_family_ef(k3, singleton_family(k3));
    auto restricted = count_matroid_ef_restricted(sparsity_spec(k3, 1, 1), ne);
    auto general = count_matroid_ef_general(sparsity_spec(k3, 1, 1));
    check_lp_equivalent(restricted, general, 20, 53u);
}

TEST_CASE("general route handles non-uniform node counts") {
    auto p3 = corpus::p3();
    auto spec = make_count_matroid(p3, {0, 2, 1}, 2);
    auto e = count_matroid_ef_general(spec);
    auto sets = enumerate_independent_sets(spec);
    std::mt19937_64 rng(67);
    LpSolver solver(e.system);
    auto idx = e.projection_indices();
    for (int t = 0; t < 20; ++t) {
        RatVector c(p3.edge_count());
        for (auto& v : c) v = rat(static_cast<long>(rng() % 21) - 10);
        RatVector full(e.system.var_count());
        for (std::size_t p = 0; p < idx.size(); ++p) full[idx[p]] = c[p];
        auto r = solver.maximize(full);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == brute_max_over_sets(sets, c));
    }
}

}  // TEST_SUITE
