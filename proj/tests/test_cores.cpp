#include <doctest.h>

#include "cubic/constructions.hpp"
#include "cubic/cores.hpp"
#include "cubic/edge_coloring.hpp"
#include "support/oracles.hpp"

using namespace cubic;

namespace {

// the three color classes of K4 as joins
std::array<Join, 3> k4_color_classes(const CubicGraph& k4) {
    auto cls = [&](int a, int b, int c, int d) {
        EdgeSubset s(k4.edge_count());
        s.set(k4.edge_index(a, b));
        s.set(k4.edge_index(c, d));
        return Join::over(k4, s);
    };
    return {cls(0, 1, 2, 3), cls(0, 2, 1, 3), cls(0, 3, 1, 2)};
}

EdgeSubset full_set(const CubicGraph& g) {
    EdgeSubset s(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) s.set(e);
    return s;
}

}  // namespace

TEST_CASE("K4 color classes give the empty core") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    auto cls = k4_color_classes(k4);
    CoverTriple t = make_cover_triple(cls[0], cls[1], cls[2]);
    CHECK(t.partition[1].count() == 6);
    CHECK(t.partition[0].none());
    CHECK(t.partition[2].none());
    CHECK(t.partition[3].none());
    CHECK(t.types.e == 4);
    CHECK(t.types.a + t.types.b + t.types.c + t.types.d + t.types.f + t.types.g == 0);

    WeakCore core = weak_core(t);
    CHECK(core.k == 0);
    CHECK(core.l2 == 0);
    CHECK(core.edges.none());

    CoreProperties p = core_properties(t);
    CHECK(p.is_cyclic);
    CHECK(p.is_bipartite);
    CHECK(p.is_triangle_free);
    CHECK(p.is_simple);
}

TEST_CASE("repeated matching triple on K4") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    Join m = perfect_matchings(k4)[0];
    CoverTriple t = make_cover_triple(m, m, m);
    CHECK(t.partition[3].count() == 2);
    CHECK(t.partition[0].count() == 4);
    CHECK(t.types.g == 4);
    // identity: |E0| + sum n = |E2| + 2|E3|  ->  4 + 0 = 0 + 2*2
    CHECK(weak_core(t).l2 == 8);
    CHECK(weak_core(t).k == 0);

    CoreProperties p = core_properties(t);
    CHECK_FALSE(p.is_cyclic);  // every vertex has core degree 3
    CHECK_FALSE(p.is_bipartite);
    CHECK_FALSE(p.is_triangle_free);
    CHECK(p.is_simple);
}

TEST_CASE("all distinct petersen matching triples have the documented partition") {
    CubicGraph p = build_named(NamedGraph::petersen);
    std::vector<Join> pms = perfect_matchings(p);
    REQUIRE(pms.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k) {
                CoverTriple t = make_cover_triple(pms[i], pms[j], pms[k]);
                CHECK(t.partition[3].none());
                CHECK(t.partition[2].count() == 3);
                CHECK(t.partition[1].count() == 9);
                CHECK(t.partition[0].count() == 3);
                WeakCore core = weak_core(t);
                CHECK(core.k == 0);
                CHECK(core.l2 == 6);  // l = 3
                // consequences of an empty intersection
                CoreProperties props = core_properties(t);
                CHECK(props.is_cyclic);
                CHECK(props.is_bipartite);
                CHECK(props.is_triangle_free);
            }
}

TEST_CASE("a one-join triple on K4") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    std::vector<Join> pms = perfect_matchings(k4);
    Join all = Join::over(k4, full_set(k4));
    CoverTriple t = make_cover_triple(pms[0], pms[1], all);
    WeakCore core = weak_core(t);
    CHECK(core.k == 1);
    CHECK(core.l2 == 2 * t.partition[0].count() + 12);  // n(E(g)) = 4
}

TEST_CASE("mixed-graph triples are rejected") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    CubicGraph p = build_named(NamedGraph::petersen);
    Join a = perfect_matchings(k4)[0];
    Join b = perfect_matchings(p)[0];
    CHECK_THROWS_AS(make_cover_triple(a, a, b), DomainError);
}

TEST_CASE("counting identity and type relations hold for all K4 join triples") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    std::vector<Join> js = joins(k4);
    REQUIRE(js.size() == 8);
    for (const Join& j1 : js)
        for (const Join& j2 : js)
            for (const Join& j3 : js) {
                // construction asserts the identity and the type relations
                CoverTriple t = make_cover_triple(j1, j2, j3);
                // weak core structure: E0 u E2 has all degrees 0 or 2
                EdgeSubset e0e2 = t.partition[0] | t.partition[2];
                for (int v = 0; v < k4.vertex_count(); ++v) {
                    int deg = oracles::subset_vertex_degree(k4, e0e2, v);
                    CHECK((deg == 0 || deg == 2));
                }
            }
}

TEST_CASE("mu3 of K4 is zero and of the petersen graph is three") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    MinimizeResult r = minimize_core(k4, 0, CoreObjective::l);
    CHECK(r.status == SearchStatus::found);
    CHECK(r.best_l2 == 0);

    CubicGraph p = build_named(NamedGraph::petersen);
    r = minimize_core(p, 0, CoreObjective::l);
    CHECK(r.status == SearchStatus::found);
    CHECK(r.best_l2 == 6);  // l = 3
    REQUIRE(r.witness.has_value());
    for (const Join& j : r.witness->joins) CHECK(j.is_perfect_matching());
}

TEST_CASE("minimize_core agrees with the naive triple loop on small graphs") {
    std::vector<CubicGraph> fixtures;
    fixtures.push_back(build_named(NamedGraph::k4));
    fixtures.push_back(build_named(NamedGraph::k3_3));
    fixtures.push_back(build_named(NamedGraph::petersen));
    fixtures.push_back(generalized_petersen(4, 1));  // cube
    fixtures.push_back(generalized_petersen(5, 1));
    fixtures.push_back(moebius_ladder(4));
    for (const CubicGraph& g : fixtures) {
        std::vector<EdgeSubset> js;
        for (const Join& j : joins(g)) js.push_back(j.edges);
        for (int k_max : {0, 1, 3}) {
            oracles::NaiveMinimum naive = oracles::naive_core_minimum(g, js, k_max);
            MinimizeResult r = minimize_core(g, k_max, CoreObjective::l, Budget::unlimited());
            REQUIRE(r.status == SearchStatus::found);
            CHECK(r.best_l2 == naive.l2);
            CHECK(weak_core(*r.witness).l2 == r.best_l2);
            CHECK(weak_core(*r.witness).k <= k_max);
        }
        oracles::NaiveMinimum naive = oracles::naive_core_minimum(g, js, 3);
        MinimizeResult r =
            minimize_core(g, 3, CoreObjective::cyclic_feasibility, Budget::unlimited());
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.best_k == naive.cyclic_k);
        CHECK(core_properties(*r.witness).is_cyclic);
    }
}

namespace {

// replace vertex v by a triangle, one original edge per corner
CubicGraph expand_vertex_to_triangle(const CubicGraph& g, int v) {
    int n = g.vertex_count();
    std::vector<Edge> edges;
    const auto& inc = g.incident(v);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == inc[0]) continue;  // v keeps its first edge
        auto [a, b] = g.edge(e);
        if (e == inc[1]) {
            edges.push_back({g.other_end(e, v), n});
        } else if (e == inc[2]) {
            edges.push_back({g.other_end(e, v), n + 1});
        } else {
            edges.push_back({a, b});
        }
    }
    edges.push_back({v, g.other_end(inc[0], v)});
    edges.push_back({v, n});
    edges.push_back({v, n + 1});
    edges.push_back({n, n + 1});
    return CubicGraph::from_edges(n + 2, std::move(edges));
}

}  // namespace

TEST_CASE("branch and bound matches the naive loop on a 12-vertex class 2 graph") {
    CubicGraph g = expand_vertex_to_triangle(build_named(NamedGraph::petersen), 0);
    REQUIRE(g.vertex_count() == 12);
    REQUIRE(is_bridgeless(g));
    REQUIRE_FALSE(is_three_edge_colorable(g));  // triangle expansion keeps class 2

    std::vector<EdgeSubset> js;
    for (const Join& j : joins(g)) js.push_back(j.edges);
    REQUIRE(js.size() == 128);
    oracles::NaiveMinimum naive = oracles::naive_core_minimum(g, js, 3);

    MinimizeResult mu3p = minimize_core(g, 3, CoreObjective::l, Budget::unlimited());
    REQUIRE(mu3p.status == SearchStatus::found);
    CHECK(mu3p.best_l2 == naive.l2);
    CHECK(mu3p.best_l2 > 0);  // class 2

    MinimizeResult cyc = minimize_core(g, 3, CoreObjective::cyclic_feasibility, Budget::unlimited());
    REQUIRE(cyc.status == SearchStatus::found);
    CHECK(cyc.best_k == naive.cyclic_k);

    oracles::NaiveMinimum naive0 = oracles::naive_core_minimum(g, js, 0);
    MinimizeResult mu3 = minimize_core(g, 0, CoreObjective::l, Budget::unlimited());
    REQUIRE(mu3.status == SearchStatus::found);
    CHECK(mu3.best_l2 == naive0.l2);
    CHECK(mu3p.best_l2 <= mu3.best_l2);
}

TEST_CASE("a triple with a non-simple member is reported as non-simple") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    std::vector<Join> pms = perfect_matchings(k4);
    Join all = Join::over(k4, full_set(k4));
    CoverTriple t = make_cover_triple(pms[0], pms[1], all);
    CHECK_FALSE(core_properties(t).is_simple);  // E(g) induces K4 itself on its J-vertices
}

TEST_CASE("the flower snark J5 admits a cyclic core at k = 0") {
    CubicGraph j5 = flower_snark(5);
    // it has a fan-raspaud triple, whose empty intersection forces a cyclic core
    WitnessResult fr = find_witness(j5, ConjectureId::fan_raspaud);
    REQUIRE(fr.status == SearchStatus::found);
    MinimizeResult r = minimize_core(j5, 3, CoreObjective::cyclic_feasibility);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.best_k == 0);
}

TEST_CASE("mu3-prime is zero exactly for 3-edge-colorable fixtures") {
    struct Case {
        NamedGraph name;
        bool colorable;
    } cases[] = {{NamedGraph::k4, true}, {NamedGraph::k3_3, true}, {NamedGraph::petersen, false}};
    for (auto [name, colorable] : cases) {
        CubicGraph g = build_named(name);
        REQUIRE(is_three_edge_colorable(g) == colorable);
        MinimizeResult r = minimize_core(g, 3, CoreObjective::l);
        REQUIRE(r.status == SearchStatus::found);
        CHECK((r.best_l2 == 0) == colorable);
        MinimizeResult mu3 = minimize_core(g, 0, CoreObjective::l);
        CHECK(r.best_l2 <= mu3.best_l2);  // mu3' <= mu3
    }
}

TEST_CASE("petersen admits a cyclic core at k = 0") {
    CubicGraph p = build_named(NamedGraph::petersen);
    MinimizeResult r = minimize_core(p, 3, CoreObjective::cyclic_feasibility);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.best_k == 0);
}

TEST_CASE("minimization respects a tiny budget") {
    CubicGraph p = build_named(NamedGraph::petersen);
    MinimizeResult r = minimize_core(p, 3, CoreObjective::l, Budget{50, 0});
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(r.nodes <= 51);
}

TEST_CASE("the wall-clock cap also stops a search") {
    // large enough that the full search takes well over a millisecond
    CubicGraph j7 = flower_snark(7);
    MinimizeResult r = minimize_core(j7, 3, CoreObjective::l, Budget{UINT64_MAX, 1});
    CHECK(r.status == SearchStatus::budget_exceeded);
}

namespace {

CubicGraph bridged_fixture() {
    std::vector<Edge> e;
    auto add_block = [&](int base, int sub) {
        e.push_back({base + 0, base + 2});
        e.push_back({base + 0, base + 3});
        e.push_back({base + 1, base + 2});
        e.push_back({base + 1, base + 3});
        e.push_back({base + 2, base + 3});
        e.push_back({base + 0, sub});
        e.push_back({base + 1, sub});
    };
    add_block(0, 4);
    add_block(5, 9);
    e.push_back({4, 9});
    return CubicGraph::from_edges(10, std::move(e));
}

}  // namespace

TEST_CASE("gated searches require a bridgeless graph") {
    CubicGraph bridged = bridged_fixture();
    CHECK_THROWS_AS(minimize_core(bridged, 0, CoreObjective::l), DomainError);
    CHECK_THROWS_AS(find_witness(bridged, ConjectureId::fan_raspaud), DomainError);
}

TEST_CASE("find_witness succeeds on K4 for every conjecture id") {
    CubicGraph k4 = build_named(NamedGraph::k4);
    for (int i = 0; i < 8; ++i) {
        ConjectureId id = static_cast<ConjectureId>(i);
        WitnessResult w = find_witness(k4, id);
        CHECK(w.status == SearchStatus::found);
        CHECK(witness_satisfies(k4, id, w.witness));
    }
}

TEST_CASE("find_witness succeeds on the petersen graph for every conjecture id") {
    CubicGraph p = build_named(NamedGraph::petersen);
    for (int i = 0; i < 8; ++i) {
        ConjectureId id = static_cast<ConjectureId>(i);
        WitnessResult w = find_witness(p, id);
        CHECK(w.status == SearchStatus::found);
        CHECK(witness_satisfies(p, id, w.witness));
    }
}

TEST_CASE("fan-raspaud witnesses on petersen have an empty intersection by construction") {
    CubicGraph p = build_named(NamedGraph::petersen);
    WitnessResult w = find_witness(p, ConjectureId::fan_raspaud);
    REQUIRE(w.status == SearchStatus::found);
    REQUIRE(w.witness.size() == 3);
    CHECK((w.witness[0] & w.witness[1] & w.witness[2]).none());
}

TEST_CASE("witness searches report budget exhaustion distinctly") {
    CubicGraph p = build_named(NamedGraph::petersen);
    WitnessResult w = find_witness(p, ConjectureId::fan_raspaud, Budget{3, 0});
    CHECK(w.status == SearchStatus::budget_exceeded);
}

TEST_CASE("witness_satisfies rejects corrupted witnesses") {
    CubicGraph p = build_named(NamedGraph::petersen);
    WitnessResult w = find_witness(p, ConjectureId::fan_raspaud);
    REQUIRE(w.status == SearchStatus::found);
    std::vector<EdgeSubset> bad = w.witness;
    bad[0] = full_set(p);  // not a matching
    CHECK_FALSE(witness_satisfies(p, ConjectureId::fan_raspaud, bad));
    bad = w.witness;
    bad.pop_back();
    CHECK_FALSE(witness_satisfies(p, ConjectureId::fan_raspaud, bad));
}

TEST_CASE("conjecture names round trip") {
    for (int i = 0; i < 8; ++i) {
        ConjectureId id = static_cast<ConjectureId>(i);
        auto back = conjecture_from_name(std::string(conjecture_name(id)));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(conjecture_from_name("FR") == ConjectureId::fan_raspaud);
    CHECK(conjecture_from_name("acyclic-E0-3PM") == ConjectureId::acyclic_e0_3pm);
    CHECK_FALSE(conjecture_from_name("nonsense").has_value());
}
