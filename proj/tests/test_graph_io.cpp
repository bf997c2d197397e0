#include <random>

#include "doctest.h"
#include "jones/canonical.hpp"
#include "jones/graph_io.hpp"
#include "jones/named_graphs.hpp"

using namespace jones;

TEST_CASE("graph6 examples") {
    Multigraph k3 = parse("Bw", GraphFormat::graph6);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(isomorphic(k3, named::complete(3)));
    CHECK(serialize(named::complete(3), GraphFormat::graph6) == "Bw");

    Multigraph k4 = parse("C~", GraphFormat::graph6);
    CHECK(isomorphic(k4, named::complete(4)));
    CHECK(serialize(named::complete(4), GraphFormat::graph6) == "C~");

    CHECK(parse(">>graph6<<C~\n", GraphFormat::graph6) == k4);
    // Petersen graph as printed by nauty's geng/showg tooling.
    CHECK(isomorphic(parse("IheA@GUAo", GraphFormat::graph6), named::petersen()));
}

TEST_CASE("graph6 rejects what it cannot encode") {
    CHECK_THROWS_AS(serialize(named::theta(2), GraphFormat::graph6), std::invalid_argument);
    CHECK_THROWS_AS(serialize(Multigraph(1, {{0, 0}}), GraphFormat::graph6), std::invalid_argument);
    CHECK_THROWS_AS(parse("C~~", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse("C", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse("C\x01", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse("", GraphFormat::graph6), ParseError);
}

TEST_CASE("sparse6 encodes loops and parallel edges") {
    // Example from the nauty format description: n=7 with edges
    // 0-1 0-2 1-2 5-6.
    Multigraph g(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}});
    CHECK(serialize(g, GraphFormat::sparse6) == ":Fa@x^");
    CHECK(parse(":Fa@x^", GraphFormat::sparse6) == g);

    Multigraph theta = named::theta(3);
    Multigraph back = parse(serialize(theta, GraphFormat::sparse6), GraphFormat::sparse6);
    CHECK(back == theta);

    Multigraph loop(1, {{0, 0}});
    CHECK(parse(serialize(loop, GraphFormat::sparse6), GraphFormat::sparse6) == loop);
    CHECK_THROWS_AS(parse("Fa@x^", GraphFormat::sparse6), ParseError);
}

TEST_CASE("sparse6 padding special case") {
    // n = 4 (k = 2) with the last edge at vertex 2 leaves room for a bogus
    // edge unless the padding starts with a 0 bit.
    for (const Multigraph &g : {Multigraph(4, {{0, 1}, {1, 2}}), Multigraph(2, {{0, 0}}), Multigraph(8, {{5, 6}}),
                                Multigraph(16, {{0, 14}}), Multigraph(4, {{2, 2}})}) {
        CHECK(parse(serialize(g, GraphFormat::sparse6), GraphFormat::sparse6) == g);
    }
}

TEST_CASE("edge-list format") {
    Multigraph theta = parse("2 3\n0 1\n0 1\n0 1\n", GraphFormat::edge_list);
    CHECK(theta == named::theta(3));
    CHECK(serialize(theta, GraphFormat::edge_list) == "2 3\n0 1\n0 1\n0 1\n");
    CHECK(parse("# comment\n3 1\n# another\n2 2\n", GraphFormat::edge_list) == Multigraph(3, {{2, 2}}));
    CHECK_THROWS_AS(parse("2 2\n0 1\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("2 1\n0 2\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("2 1\n0 x\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse("", GraphFormat::edge_list), ParseError);
}

TEST_CASE("format names") {
    CHECK(format_from_name("g6") == GraphFormat::graph6);
    CHECK(format_from_name("s6") == GraphFormat::sparse6);
    CHECK(format_from_name("edges") == GraphFormat::edge_list);
    CHECK_FALSE(format_from_name("dot").has_value());
}

TEST_CASE("property: parse after serialize is isomorphic") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 70);
        int m = static_cast<int>(rng() % 90);
        std::vector<Edge> multi, simple;
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < m; ++i) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            multi.push_back({a, b});
            if (a != b && !seen[a][b]) {
                seen[a][b] = seen[b][a] = 1;
                simple.push_back({a, b});
            }
        }
        Multigraph gm(n, multi), gs(n, simple);
        for (GraphFormat f : {GraphFormat::sparse6, GraphFormat::edge_list}) {
            Multigraph back = parse(serialize(gm, f), f);
            CHECK(back.vertex_count() == gm.vertex_count());
            CHECK(back.edge_count() == gm.edge_count());
            if (n <= 16) CHECK(isomorphic(back, gm));
        }
        Multigraph back = parse(serialize(gs, GraphFormat::graph6), GraphFormat::graph6);
        CHECK(back.edge_count() == gs.edge_count());
        if (n <= 16) CHECK(isomorphic(back, gs));
    }
}

TEST_CASE("parse_many splits lines") {
    auto gs = parse_many("Bw\n\nC~\n", GraphFormat::graph6);
    REQUIRE(gs.size() == 2);
    CHECK(gs[1].edge_count() == 6);
}
