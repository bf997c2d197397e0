#include <random>

#include "doctest.h"
#include "jones/named_graphs.hpp"
#include "jones/structure.hpp"

using namespace jones;

namespace {

Multigraph random_subcubic(std::mt19937 &rng, int n, bool allow_multi) {
    std::vector<Edge> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int tries = 0; tries < 4 * n; ++tries) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (!allow_multi && a == b) continue;
        int need_a = 1 + (a == b), need_b = a == b ? 0 : 1;
        if (deg[a] + need_a > 3 || deg[b] + need_b > 3) continue;
        if (!allow_multi) {
            bool dup = false;
            for (const Edge &e : edges) dup |= (e.u == a && e.v == b) || (e.u == b && e.v == a);
            if (dup) continue;
        }
        edges.push_back({a, b});
        deg[a] += need_a;
        deg[b] += need_b;
    }
    return Multigraph(n, edges);
}

bool disconnects(const Multigraph &g, const EdgeSet &f) {
    return components(delete_edges(g, f).graph).size() > components(g).size();
}

}  // namespace

TEST_CASE("connectivity examples") {
    CHECK(edge_connectivity(named::complete(4)) == 3);
    CHECK(vertex_connectivity(named::complete(4)) == 3);
    CHECK(edge_connectivity(named::prism()) == 3);
    CHECK(edge_connectivity(named::path(3)) == 1);
    CHECK(edge_connectivity(disjoint_union(named::cycle(3), named::cycle(3))) == 0);
    CHECK(edge_connectivity(named::theta(3)) == 3);
    CHECK(vertex_connectivity(named::petersen()) == 3);
    CHECK(vertex_connectivity(named::bridged_triangles()) == 1);
    CHECK(is_bridge(named::bridged_triangles(), 6));
    CHECK_FALSE(is_bridge(named::bridged_triangles(), 0));
}

TEST_CASE("cut enumeration examples") {
    SUBCASE("bridged triangles have one bridge") {
        auto cuts = enumerate_cuts(named::bridged_triangles(), 1);
        REQUIRE(cuts.size() == 1);
        CHECK(cuts[0].edges == EdgeSet{6});
        CHECK(cuts[0].side_a == VertexSet{0, 1, 2});
        CHECK(cuts[0].cyclic);
        CHECK_FALSE(cuts[0].trivial);
    }
    SUBCASE("prism rungs and stars") {
        Multigraph p = named::prism();
        auto cuts = enumerate_cuts(p, 3);
        int nontrivial = 0, trivial = 0;
        for (const EdgeCut &c : cuts) {
            if (c.trivial) {
                ++trivial;
                CHECK((c.side_a.size() == 1 || c.side_b.size() == 1));
            } else {
                ++nontrivial;
                CHECK(c.cyclic);
                CHECK(c.side_a == VertexSet{0, 1, 2});
            }
        }
        CHECK(nontrivial == 1);
        CHECK(trivial == 6);
        CHECK(enumerate_cuts(p, 1).empty());
        CHECK(enumerate_cuts(p, 2).empty());
    }
    SUBCASE("K4 only has vertex stars") {
        auto cuts = enumerate_cuts(named::complete(4), 3);
        CHECK(cuts.size() == 4);
        for (const EdgeCut &c : cuts) CHECK(c.trivial);
    }
    CHECK_THROWS_AS(enumerate_cuts(named::complete(4), 4), std::invalid_argument);
    CHECK_FALSE(as_minimal_cut(named::prism(), EdgeSet{0, 1}).has_value());
}

TEST_CASE("essential and cyclic 4-edge-connectivity") {
    CHECK_FALSE(is_essentially_4ec(named::prism()));
    CHECK_FALSE(is_cyclically_4ec(named::prism()));
    CHECK(is_cyclically_4ec(named::complete(4)));
    CHECK(is_essentially_4ec(named::complete(4)));
    CHECK(is_cyclically_4ec(named::dodecahedron()));
    CHECK(is_essentially_4ec(named::dodecahedron()));
    CHECK(is_cyclically_4ec(named::petersen()));
    CHECK_FALSE(is_cyclically_4ec(named::bridged_triangles()));
    CHECK_FALSE(is_cyclically_4ec(named::double_diamond()));
}

TEST_CASE("planarity") {
    CHECK(is_planar(named::complete(4)));
    CHECK_FALSE(is_planar(named::petersen()));
    CHECK(is_planar(named::theta(3)));
    CHECK_FALSE(is_planar(named::complete(5)));
    CHECK(is_planar(named::dodecahedron()));
    CHECK(is_planar(Multigraph(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 2}})));
    CHECK_THROWS_AS(planar_embedding(named::petersen()), NotPlanar);
}

TEST_CASE("faces of fixed embeddings") {
    auto count_cycles = [](const std::vector<Face> &fs) {
        int c = 0;
        for (const Face &f : fs) c += f.is_cycle;
        return c;
    };
    Multigraph c3 = named::cycle(3);
    auto f3 = faces(c3, planar_embedding(c3));
    CHECK(f3.size() == 2);
    CHECK(count_cycles(f3) == 2);

    Multigraph k4 = named::complete(4);
    auto f4 = faces(k4, planar_embedding(k4));
    CHECK(f4.size() == 4);
    for (const Face &f : f4) CHECK(f.walk.size() == 3);

    Multigraph q3 = named::cube();
    auto fq = faces(q3, planar_embedding(q3));
    CHECK(fq.size() == 6);
    for (const Face &f : fq) {
        CHECK(f.walk.size() == 4);
        CHECK(f.is_cycle);
    }

    Multigraph theta = named::theta(3);
    auto ft = faces(theta, planar_embedding(theta));
    CHECK(ft.size() == 3);
    CHECK(count_cycles(ft) == 3);
}

TEST_CASE("rotation text format") {
    Multigraph g(2, {{0, 1}, {0, 0}, {0, 1}});
    RotationSystem rot = planar_embedding(g);
    std::string text = format_rotation(g, rot);
    CHECK(parse_rotation(g, text) == rot);
    CHECK(text.find("0:") == 0);
    CHECK_THROWS_AS(parse_rotation(g, "0: 0 1 2\n1: 0 2\n"), InvalidRotation);
    CHECK_THROWS_AS(parse_rotation(g, "0: 0 1 1 2\n1: 0\n"), InvalidRotation);
    RotationSystem bad = rot;
    std::swap(bad.order[0][0], bad.order[1][0]);
    CHECK_THROWS_AS(validate_rotation(g, bad), InvalidRotation);
}

TEST_CASE("property: cuts disconnect and are minimal") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Multigraph g = random_subcubic(rng, 4 + static_cast<int>(rng() % 7), trial % 2 == 0);
        for (int k = 1; k <= 3; ++k) {
            for (const EdgeCut &c : enumerate_cuts(g, k)) {
                CHECK(c.edges.size() == static_cast<std::size_t>(k));
                CHECK(disconnects(g, c.edges));
                for (EdgeId e : c.edges) {
                    EdgeSet smaller = c.edges;
                    smaller.erase(e);
                    CHECK_FALSE(disconnects(g, smaller));
                }
                for (EdgeId e : c.edges) {
                    const Edge &ed = g.edge(e);
                    CHECK(c.side_a.contains(ed.u) != c.side_a.contains(ed.v));
                }
            }
        }
    }
}

TEST_CASE("property: subcubic edge and vertex connectivity agree") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        Multigraph g = random_subcubic(rng, n, false);
        if (!is_connected(g)) continue;
        int ec = edge_connectivity(g), vc = vertex_connectivity(g);
        for (int k = 1; k <= 3; ++k) {
            if (n < k + 1) continue;
            CHECK((ec >= k) == (vc >= k));
        }
    }
}

TEST_CASE("property: Euler relation and face walk lengths") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Multigraph g = random_subcubic(rng, 1 + static_cast<int>(rng() % 12), trial % 3 != 0);
        if (!is_planar(g)) {
            continue;
        }
        auto fs = faces(g, planar_embedding(g));
        std::size_t walk = 0;
        for (const Face &f : fs) walk += f.walk.size();
        CHECK(walk == 2 * static_cast<std::size_t>(g.edge_count()));
        int nontrivial = 0, isolated = 0;
        for (const VertexSet &c : components(g)) {
            if (c.size() == 1 && g.degree(c.items()[0]) == 0) ++isolated;
            else ++nontrivial;
        }
        CHECK(g.vertex_count() - isolated - g.edge_count() + static_cast<int>(fs.size()) == 2 * nontrivial);
    }
}

TEST_CASE("property: Euler pre-filter never contradicts planarity") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 != 0) edges.push_back({a, b});
        Multigraph g(n, edges);
        if (g.edge_count() > 3 * n - 6) CHECK_FALSE(is_planar(g));
    }
}

TEST_CASE("property: cubic graphs have equal essential and cyclic 4ec") {
    for (const Multigraph &g : {named::complete(4), named::prism(), named::cube(), named::petersen(),
                                named::dodecahedron(), named::double_diamond(), named::theta(3)}) {
        CHECK(is_essentially_4ec(g) == is_cyclically_4ec(g));
    }
}
