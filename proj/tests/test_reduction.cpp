#include <random>

#include "doctest.h"
#include "jones/canonical.hpp"
#include "jones/named_graphs.hpp"
#include "jones/reduction.hpp"

using namespace jones;

namespace {

Multigraph g_of(const Decomposition &d, const char *name) { return d.part(name).graph; }

// G1 and G2 side by side again, with the cut edges put back.
Multigraph reassemble(const Decomposition &d) {
    const Part &a = d.part("G1"), &b = d.part("G2");
    std::vector<Edge> edges;
    int n1 = a.graph.vertex_count();
    for (const Edge &e : a.graph.edges()) edges.push_back(e);
    for (const Edge &e : b.graph.edges()) edges.push_back({e.u + n1, e.v + n1});
    auto local = [](const Part &p, Vertex v) {
        for (std::size_t i = 0; i < p.map.vertex_to_parent.size(); ++i)
            if (p.map.vertex_to_parent[i] == v) return static_cast<Vertex>(i);
        return kNone;
    };
    for (const BoundaryEdge &be : d.boundary) edges.push_back({local(a, be.end1), local(b, be.end2) + n1});
    return Multigraph(n1 + b.graph.vertex_count(), edges);
}

Multigraph random_multigraph(std::mt19937 &rng, int n, int m, bool subcubic) {
    std::vector<Edge> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int tries = 0; tries < 6 * m && static_cast<int>(edges.size()) < m; ++tries) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (subcubic && (deg[a] + 1 + (a == b) > 3 || deg[b] + 1 > 3)) continue;
        ++deg[a];
        ++deg[b];
        edges.push_back({a, b});
    }
    return Multigraph(n, edges);
}

// Three-leaf star on the far side of a triangle: the boundary ends all
// stay connected through the tree.
Multigraph triangle_and_star() {
    return Multigraph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 5}, {3, 6}, {0, 4}, {1, 5}, {2, 6}});
}

}  // namespace

TEST_CASE("suppress_degree2") {
    SUBCASE("C4 becomes C3") {
        Multigraph c4 = named::cycle(4);
        Suppression s = suppress_degree2(c4, 0);
        CHECK(isomorphic(s.graph, named::cycle(3)));
        CHECK(cp_exact(s.graph).size == 1);
        CHECK(fvs_exact(s.graph).size == 1);
        Cycle whole = enumerate_cycles(c4)[0];
        Cycle down = s.cycle_to_child(c4, whole);
        CHECK(down.size() == 3);
        CHECK(is_cycle(c4, s.cycle_to_parent(c4, down)));
    }
    SUBCASE("inside a tree") {
        Multigraph p = named::path(3);
        Suppression s = suppress_degree2(p, 1);
        CHECK(s.graph.vertex_count() == 2);
        CHECK(s.graph.edge_count() == 1);
        CHECK(fvs_exact(s.graph).size == 0);
    }
    SUBCASE("two parallel edges become a loop") {
        Multigraph g(3, {{0, 1}, {0, 1}, {0, 2}});
        Suppression s = suppress_degree2(g, 1);
        CHECK(s.graph.loop_count(0) == 1);
        CHECK(cp_exact(s.graph).size == 1);
        CHECK(cp_exact(g).size == 1);
        CHECK(s.cycle_to_child(g, Cycle{0, 1}) == Cycle{s.new_edge});
        CHECK(s.fvs_to_child(VertexSet{1}) == VertexSet{0});
    }
    CHECK_THROWS_AS(suppress_degree2(named::complete(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(suppress_degree2(Multigraph(1, {{0, 0}}), 0), std::invalid_argument);
}

TEST_CASE("delete_degree_le1") {
    Multigraph tri_tail(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    CHECK(isomorphic(delete_degree_le1(tri_tail).graph, named::cycle(3)));
    CHECK(delete_degree_le1(named::path(6)).graph.vertex_count() == 0);
    CHECK(delete_degree_le1(named::petersen()).graph == named::petersen());
}

TEST_CASE("split_bridge") {
    SUBCASE("two triangles") {
        Multigraph g = named::bridged_triangles();
        Decomposition d = split_bridge(g, 6);
        CHECK(isomorphic(g_of(d, "G1"), named::cycle(3)));
        CHECK(isomorphic(g_of(d, "G2"), named::cycle(3)));
        CHECK(fvs_exact(g).size == 2);
        CHECK(cp_exact(g).size == 2);
        Certificate c = check_certificate(d);
        CHECK(c.holds());
    }
    SUBCASE("pendant edge") {
        Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
        Decomposition d = split_bridge(g, 3);
        CHECK(isomorphic(g_of(d, "G1"), named::cycle(3)));
        CHECK(g_of(d, "G2").vertex_count() == 1);
    }
    SUBCASE("P5 middle edge") {
        Decomposition d = split_bridge(named::path(5), 1);
        CHECK(isomorphic(g_of(d, "G1"), named::path(2)));
        CHECK(isomorphic(g_of(d, "G2"), named::path(3)));
        Certificate c = check_certificate(d);
        for (const Inequality &i : c.items) CHECK(i.left == 0);
    }
    CHECK_THROWS_AS(split_bridge(named::cycle(4), 0), std::invalid_argument);
}

TEST_CASE("split_2cut") {
    SUBCASE("two diamonds") {
        Multigraph g = named::double_diamond();
        auto cut = as_minimal_cut(g, EdgeSet{10, 11});
        REQUIRE(cut);
        Decomposition d = split_2cut(g, *cut);
        CHECK(isomorphic(g_of(d, "G1'"), named::complete(4)));
        CHECK(isomorphic(g_of(d, "G2'"), named::complete(4)));
        // Every 2-set hitting both diamonds leaves a 6-cycle through the cut.
        CHECK(fvs_bruteforce(g).size == 3);
        CHECK(fvs_exact(g).size == 3);
        Certificate c = check_cut2_certificate(d);
        CHECK(c.holds());
        CHECK(d.part("G1'").virtual_tags == std::vector<std::string>{"A+B"});
    }
    SUBCASE("C4 opposite edges") {
        Multigraph g = named::cycle(4);
        Decomposition d = split_2cut(g, *as_minimal_cut(g, EdgeSet{0, 2}));
        CHECK(isomorphic(g_of(d, "G1'"), named::theta(2)));
        CHECK(cp_exact(g_of(d, "G1'")).size == 1);
        CHECK(cp_exact(g_of(d, "G1")).size == 0);
        CHECK(check_certificate(d).holds());
    }
    SUBCASE("C6 opposite edges") {
        Multigraph g = named::cycle(6);
        Decomposition d = split_2cut(g, *as_minimal_cut(g, EdgeSet{0, 3}));
        CHECK(isomorphic(g_of(d, "G1"), named::path(3)));
        CHECK(isomorphic(g_of(d, "G1'"), named::cycle(3)));
        CHECK(cp_exact(g_of(d, "G1'")).size == 1);
    }
    CHECK_THROWS_AS(split_2cut(named::complete(4), enumerate_cuts(named::complete(4), 3)[0]), std::invalid_argument);
    EdgeCut fake;
    fake.edges = EdgeSet{0, 1};
    CHECK_THROWS_AS(split_2cut(named::prism(), fake), std::invalid_argument);
}

TEST_CASE("combine_packings_2cut") {
    SUBCASE("C4 halves make the 4-cycle") {
        Multigraph g = named::cycle(4);
        Decomposition d = split_2cut(g, *as_minimal_cut(g, EdgeSet{0, 2}));
        CyclePacking p = combine_packings_2cut(d, cp_exact(g_of(d, "G1'")), cp_exact(g_of(d, "G2'")));
        CHECK(p.size == 1);
        CHECK(p.cycles[0].size() == 4);
    }
    SUBCASE("diamond triangles transfer directly") {
        Multigraph g = named::double_diamond();
        Decomposition d = split_2cut(g, *as_minimal_cut(g, EdgeSet{10, 11}));
        // The triangle 0-1-2 avoids the virtual edge 2-3 of G1'.
        CyclePacking p1, p2;
        p1.cycles = {Cycle{0, 3, 1}};
        p2.cycles = {Cycle{0, 3, 1}};
        p1.size = p2.size = 1;
        CyclePacking p = combine_packings_2cut(d, p1, p2);
        CHECK(p.size == 2);
        CHECK(is_cycle_packing(g, p.cycles));
    }
    SUBCASE("only one side uses its virtual edge") {
        Multigraph g = named::double_diamond();
        Decomposition d = split_2cut(g, *as_minimal_cut(g, EdgeSet{10, 11}));
        const Part &a = d.part("G1'");
        CyclePacking p1, p2;
        p1.cycles = {arrange_cycle(a.graph, {1, 2, a.virtual_edges[0]})};
        p2.cycles = {Cycle{0, 3, 1}};
        p1.size = p2.size = 1;
        CyclePacking p = combine_packings_2cut(d, p1, p2);
        CHECK(p.size == 1);
    }
}

TEST_CASE("decompose_3cut") {
    Multigraph prism = named::prism();
    auto cuts = enumerate_cuts(prism, 3);
    const EdgeCut *rung = nullptr;
    for (const EdgeCut &c : cuts)
        if (!c.trivial) rung = &c;
    REQUIRE(rung);
    Decomposition d = decompose_3cut(prism, *rung);
    CHECK(isomorphic(g_of(d, "G1"), named::cycle(3)));
    CHECK(isomorphic(g_of(d, "G2"), named::cycle(3)));
    CHECK(isomorphic(g_of(d, "G1^ABC"), named::complete(4)));
    CHECK(isomorphic(g_of(d, "G2^ABC"), named::complete(4)));
    Multigraph tri_double(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
    for (const char *name : {"G1^AB", "G1^AC", "G1^BC", "G2^AB", "G2^AC", "G2^BC"})
        CHECK(isomorphic(g_of(d, name), tri_double));
    for (const Part &p : d.parts) CHECK(p.graph.vertex_count() < prism.vertex_count());

    CHECK_THROWS_AS(decompose_3cut(named::complete(4), enumerate_cuts(named::complete(4), 3)[0]), std::invalid_argument);
    bool cube_nontrivial = false;
    for (const EdgeCut &c : enumerate_cuts(named::cube(), 3)) cube_nontrivial |= !c.trivial;
    CHECK_FALSE(cube_nontrivial);
}

TEST_CASE("tree_median") {
    Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(tree_median(star, 1, 2, 3) == 0);
    CHECK(tree_median(named::path(3), 0, 1, 2) == 1);
    Multigraph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(tree_median(spider, 2, 4, 6) == 0);
    CHECK(tree_median(spider, 2, 2, 4) == 2);
    CHECK_THROWS_AS(tree_median(named::cycle(3), 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(tree_median(disjoint_union(named::path(2), named::path(2)), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("lift_fvs_3cut") {
    SUBCASE("prism") {
        Multigraph prism = named::prism();
        EdgeCut rung = *as_minimal_cut(prism, EdgeSet{6, 7, 8});
        Decomposition d = decompose_3cut(prism, rung);
        FeedbackSet s_abc, s_other;
        s_abc.vertices = VertexSet{0, 3};  // 3 is x
        s_abc.size = 2;
        s_other.vertices = VertexSet{0};
        s_other.size = 1;
        FeedbackSet lifted = lift_fvs_3cut(d, 1, s_abc, s_other);
        CHECK(lifted.size <= 2);
        CHECK(is_feedback_set(prism, lifted.vertices));
    }
    SUBCASE("no median needed when x stays") {
        Multigraph prism = named::prism();
        Decomposition d = decompose_3cut(prism, *as_minimal_cut(prism, EdgeSet{6, 7, 8}));
        FeedbackSet s_abc{VertexSet{0, 1}, 2, true}, s_other{VertexSet{2}, 1, true};
        FeedbackSet lifted = lift_fvs_3cut(d, 1, s_abc, s_other);
        CHECK(lifted.size <= 3);
        CHECK(is_feedback_set(prism, lifted.vertices));
    }
    SUBCASE("tree side needs exactly one median vertex") {
        Multigraph g = triangle_and_star();
        Decomposition d = decompose_3cut(g, *as_minimal_cut(g, EdgeSet{6, 7, 8}));
        CHECK(is_forest(g_of(d, "G2")));
        FeedbackSet s_abc{VertexSet{0, 3}, 2, true}, s_other{{}, 0, true};
        FeedbackSet lifted = lift_fvs_3cut(d, 1, s_abc, s_other);
        CHECK(lifted.vertices == VertexSet{0, 3});
    }
}

TEST_CASE("cut3 certificate") {
    Multigraph prism = named::prism();
    Decomposition d = decompose_3cut(prism, *as_minimal_cut(prism, EdgeSet{6, 7, 8}));
    Certificate c = check_cut3_certificate(d);
    CHECK(c.holds());
    CHECK(c.lifts_verified);
    int labels_seen = 0;
    for (const char *label : {"a", "b", "c", "d", "e", "f"}) {
        bool found = false;
        for (const Inequality &i : c.items) found |= i.label == label;
        labels_seen += found;
    }
    CHECK(labels_seen == 6);
    for (const Inequality &i : c.items)
        if (i.label == "a") {
            CHECK(i.left == 2);
            CHECK(i.right == 2);
        }
    CHECK(c.informational.size() == 6);
    CHECK_THROWS_AS(check_cut3_certificate(split_bridge(named::bridged_triangles(), 6)), std::invalid_argument);
}

TEST_CASE("reduce_pipeline") {
    SUBCASE("tree") {
        PipelineResult r = reduce_pipeline(named::path(5));
        CHECK(r.decomposition_count() == 0);
        REQUIRE(r.leaves().size() == 1);
        CHECK(*r.leaves()[0]->leaf == LeafClass::acyclic);
    }
    SUBCASE("prism") {
        PipelineResult r = reduce_pipeline(named::prism());
        CHECK(r.nodes[0].kind == DecompositionKind::cut3);
        int cut3 = 0;
        for (const PipelineNode &n : r.nodes) cut3 += n.kind == DecompositionKind::cut3;
        CHECK(cut3 == 1);
        auto leaves = r.leaves();
        CHECK(leaves.size() == 2);
        for (const PipelineNode *l : leaves) {
            CHECK(l->graph.vertex_count() == 1);
            CHECK(l->graph.loop_count(0) == 1);
        }
        CHECK(r.witnesses_verified);
    }
    SUBCASE("dodecahedron") {
        PipelineResult r = reduce_pipeline(named::dodecahedron());
        CHECK(r.decomposition_count() == 0);
        CHECK(*r.leaves()[0]->leaf == LeafClass::essentially_4ec);
    }
    SUBCASE("disconnected") {
        PipelineResult r = reduce_pipeline(disjoint_union(named::complete(4), named::complete(4)));
        CHECK(r.nodes[0].kind == DecompositionKind::components);
        CHECK(r.leaves().size() == 2);
    }
}

TEST_CASE("property: bridge and 2-cut parts reassemble to the parent") {
    std::mt19937 rng(61);
    int seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Multigraph g = random_multigraph(rng, 3 + static_cast<int>(rng() % 7), 4 + static_cast<int>(rng() % 9), true);
        for (const EdgeCut &c : enumerate_cuts(g, 1)) {
            CHECK(isomorphic(reassemble(split_bridge(g, c.edges[0])), g));
            ++seen;
        }
        for (const EdgeCut &c : enumerate_cuts(g, 2)) {
            Decomposition d = split_2cut(g, c);
            CHECK(isomorphic(reassemble(d), g));
            Certificate cert = check_cut2_certificate(d);
            CHECK(cert.holds());
            CyclePacking p1 = cp_exact(g_of(d, "G1'")), p2 = cp_exact(g_of(d, "G2'"));
            CyclePacking merged = combine_packings_2cut(d, p1, p2);
            auto uses = [](const Part &p, const CyclePacking &pk) {
                for (const Cycle &cy : pk.cycles)
                    for (EdgeId e : cy)
                        if (e == p.virtual_edges[0]) return true;
                return false;
            };
            bool u1 = uses(d.part("G1'"), p1), u2 = uses(d.part("G2'"), p2);
            int expected = u1 && u2 ? p1.size + p2.size - 1 : p1.size + p2.size - u1 - u2;
            CHECK(merged.size == expected);
            ++seen;
        }
    }
    CHECK(seen > 50);
}

TEST_CASE("property: 3-cut certificates and lifts on random subcubic graphs") {
    std::mt19937 rng(67);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 60; ++trial) {
        Multigraph g = random_multigraph(rng, 6 + static_cast<int>(rng() % 5), 12, true);
        for (const EdgeCut &c : enumerate_cuts(g, 3)) {
            if (c.trivial) continue;
            Decomposition d = decompose_3cut(g, c);
            Certificate cert = check_cut3_certificate(d);
            CHECK(cert.holds());
            for (const Inequality &i : cert.items) {
                INFO(i.detail);
                CHECK(i.holds);
            }
            ++seen;
        }
    }
    CHECK(seen > 20);
}

TEST_CASE("property: tree_median lies on all three paths") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
        Multigraph t(n, edges);
        Vertex a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
        Vertex m = tree_median(t, a, b, c);
        Multigraph rest = delete_vertices(t, VertexSet{m}).graph;
        std::vector<int> label = component_labels(rest);
        auto idx = [&](Vertex v) { return v - (v > m); };
        std::vector<Vertex> others;
        for (Vertex v : {a, b, c})
            if (v != m) others.push_back(v);
        for (std::size_t i = 0; i < others.size(); ++i)
            for (std::size_t j = i + 1; j < others.size(); ++j)
                CHECK(label[idx(others[i])] != label[idx(others[j])]);
    }
}

TEST_CASE("property: suppression keeps cp and never raises fvs") {
    std::mt19937 rng(73);
    int seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Multigraph g = random_multigraph(rng, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 10), false);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 2 || g.loop_count(v) != 0) continue;
            Suppression s = suppress_degree2(g, v);
            FeedbackSet fg = fvs_exact(g), fc = fvs_exact(s.graph);
            CHECK(cp_exact(g).size == cp_exact(s.graph).size);
            CHECK(fc.size <= fg.size);
            CHECK(is_feedback_set(g, s.fvs_to_parent(fc.vertices)));
            CHECK(is_feedback_set(s.graph, s.fvs_to_child(fg.vertices)));
            for (const Cycle &c : enumerate_cycles(g)) CHECK(is_cycle(g, s.cycle_to_parent(g, s.cycle_to_child(g, c))));
            ++seen;
        }
    }
    CHECK(seen > 50);
}

TEST_CASE("property: pipeline leaves follow the contract") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 80; ++trial) {
        Multigraph g = random_multigraph(rng, 2 + static_cast<int>(rng() % 9), static_cast<int>(rng() % 14), true);
        PipelineResult r = reduce_pipeline(g);
        CHECK(r.witnesses_verified);
        for (const PipelineNode &n : r.nodes)
            if (n.certificate) CHECK(n.certificate->holds());
        for (const PipelineNode *l : r.leaves()) CHECK(*l->leaf != LeafClass::unresolved);
    }
}
