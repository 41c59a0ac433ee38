#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cubic/graph.hpp"
#include "support/oracles.hpp"

using namespace cubic;

TEST_CASE("graph6 decodes C~ as K4") {
    CubicGraph g = parse_graph6("C~");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(g.adjacent(u, v));
    CHECK(write_graph6(g) == "C~");
}

TEST_CASE("graph6 header and whitespace are tolerated") {
    CubicGraph g = parse_graph6(">>graph6<<C~\n");
    CHECK(g.vertex_count() == 4);
}

TEST_CASE("petersen encodes as a 9-byte line starting with I") {
    std::string line = write_graph6(build_named(NamedGraph::petersen));
    CHECK(line.size() == 9);
    CHECK(line[0] == 'I');
    CubicGraph back = parse_graph6(line);
    CHECK(back.vertex_count() == 10);
    CHECK(back.edge_count() == 15);
    CHECK(write_graph6(back) == line);
}

TEST_CASE("write-parse-write is byte stable on the named graphs") {
    for (auto name : {NamedGraph::k4, NamedGraph::k3_3, NamedGraph::petersen}) {
        CubicGraph g = build_named(name);
        std::string once = write_graph6(g);
        CHECK(write_graph6(parse_graph6(once)) == once);
    }
}

TEST_CASE("malformed graph6 reports the byte offset") {
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6(":Cdv"), ParseError);   // sparse6
    CHECK_THROWS_AS(parse_graph6("C\x1f"), ParseError);  // byte below 63
    try {
        parse_graph6("C");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("a degree violation is a domain error naming the vertex") {
    // K4 with the (2,3) bit cleared: bits 111110 -> byte 63+62 = '}'
    try {
        parse_graph6("C}");
        CHECK(false);
    } catch (const DomainError& e) {
        std::string msg = e.what();
        CHECK(msg.find("not cubic") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("from_edges rejects loops, parallels and wrong degrees") {
    CHECK_THROWS_AS(CubicGraph::from_edges(4, {{0, 0}, {1, 2}, {1, 3}, {2, 3}, {1, 2}, {0, 2}}),
                    DomainError);
    CHECK_THROWS_AS(CubicGraph::from_edges(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}),
                    DomainError);
    CHECK_THROWS_AS(CubicGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(CubicGraph::from_edges(5, {}), DomainError);  // odd order
}

TEST_CASE("handshake identity holds on all named graphs") {
    for (auto name : {NamedGraph::k4, NamedGraph::k3_3, NamedGraph::petersen}) {
        CubicGraph g = build_named(name);
        CHECK(2 * g.edge_count() == 3 * g.vertex_count());
    }
}

namespace {

// two K4s, one subdivided edge each, glued by an edge between the two
// degree-2 vertices: the glue edge is a bridge
CubicGraph bridged_graph() {
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

CubicGraph two_disjoint_k4() {
    std::vector<Edge> e;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) e.push_back({base + i, base + j});
    return CubicGraph::from_edges(8, std::move(e));
}

}  // namespace

TEST_CASE("bridge detection") {
    CHECK(is_bridgeless(build_named(NamedGraph::k4)));
    CHECK(is_bridgeless(build_named(NamedGraph::petersen)));
    CHECK(is_bridgeless(build_named(NamedGraph::k3_3)));
    CHECK_FALSE(is_bridgeless(bridged_graph()));
    CHECK_THROWS_AS(is_bridgeless(two_disjoint_k4()), DomainError);
}

TEST_CASE("bridge detection agrees with the single-edge-deletion oracle") {
    std::vector<CubicGraph> fixtures;
    fixtures.push_back(build_named(NamedGraph::k4));
    fixtures.push_back(build_named(NamedGraph::k3_3));
    fixtures.push_back(build_named(NamedGraph::petersen));
    fixtures.push_back(bridged_graph());
    {
        // Heawood, n = 14: cycle plus alternating +-5 chords
        std::vector<Edge> e;
        for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14});
        for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
        fixtures.push_back(CubicGraph::from_edges(14, std::move(e)));
    }
    for (const CubicGraph& g : fixtures) CHECK(is_bridgeless(g) == oracles::brute_bridgeless(g));
}

TEST_CASE("named graphs have the documented shape") {
    CubicGraph p = build_named(NamedGraph::petersen);
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.adjacent(0, 5));  // spoke
    CHECK(p.adjacent(5, 7));  // pentagram step

    CubicGraph k4 = build_named("k4");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    CubicGraph k33 = build_named("k3_3");
    CHECK(k33.vertex_count() == 6);
    CHECK(k33.edge_count() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) CHECK(k33.adjacent(u, v));  // bipartite by construction

    CHECK_THROWS_AS(build_named("prism"), DomainError);
}

TEST_CASE("edge order is lexicographic and incidence is consistent") {
    CubicGraph p = build_named(NamedGraph::petersen);
    for (int e = 1; e < p.edge_count(); ++e) CHECK(p.edge(e - 1) < p.edge(e));
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int e : p.incident(v)) {
            auto [a, b] = p.edge(e);
            CHECK((a == v || b == v));
        }
}

TEST_CASE("parse and write are mutually inverse over the bundled corpus") {
    for (const char* file : {DATA_DIR "/class1_sample.g6", DATA_DIR "/snarks_upto26.g6",
                             DATA_DIR "/petersen.g6"}) {
        std::ifstream in(file, std::ios::binary);
        REQUIRE_MESSAGE(in.good(), file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto lines = split_graph6_lines(buffer.str());
        REQUIRE(!lines.empty());
        for (const std::string& line : lines) {
            CubicGraph g = parse_graph6(line);
            CHECK(write_graph6(g) == line);
            CHECK(2 * g.edge_count() == 3 * g.vertex_count());
        }
    }
}

TEST_CASE("edge subsets enforce common width") {
    EdgeSubset a(15), b(6);
    CHECK_THROWS_AS(a &= b, DomainError);
    EdgeSubset c(15);
    c.set(3);
    c.set(14);
    CHECK(c.count() == 2);
    CHECK(c.complement().count() == 13);
    CHECK((c & c.complement()).none());
    CHECK((c | c.complement()).count() == 15);
    CHECK(c.to_indices() == std::vector<int>{3, 14});
    CHECK(EdgeSubset::from_indices(15, {3, 14}) == c);
    CHECK_THROWS_AS(EdgeSubset::from_indices(4, {9}), DomainError);
}
