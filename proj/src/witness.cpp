#include <algorithm>

#include "jones/solvers.hpp"

namespace jones {

bool is_feedback_set(const Multigraph &g, const VertexSet &s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) return false;
    return is_forest(delete_vertices(g, s).graph);
}

namespace {

// Vertex sequence of the closed walk, or empty when c is not a cycle.
std::vector<Vertex> walk_vertices(const Multigraph &g, const Cycle &c) {
    if (c.empty()) return {};
    for (EdgeId e : c)
        if (e < 0 || e >= g.edge_count()) return {};
    std::vector<EdgeId> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
    if (c.size() == 1) return g.edge(c[0]).is_loop() ? std::vector<Vertex>{g.edge(c[0]).u} : std::vector<Vertex>{};
    const Edge &first = g.edge(c[0]);
    if (first.is_loop()) return {};
    for (Vertex start : {first.u, first.v}) {
        std::vector<Vertex> seq{start};
        Vertex cur = first.other(start);
        bool ok = true;
        for (std::size_t i = 1; i < c.size() && ok; ++i) {
            const Edge &e = g.edge(c[i]);
            if (e.is_loop() || (e.u != cur && e.v != cur)) {
                ok = false;
                break;
            }
            seq.push_back(cur);
            cur = e.other(cur);
        }
        if (!ok || cur != start) continue;
        std::vector<Vertex> check = seq;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end()) continue;
        return seq;
    }
    return {};
}

}  // namespace

bool is_cycle(const Multigraph &g, const Cycle &c) { return !walk_vertices(g, c).empty(); }

VertexSet cycle_vertices(const Multigraph &g, const Cycle &c) {
    std::vector<int> out;
    for (EdgeId e : c) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    return VertexSet(std::move(out));
}

Cycle arrange_cycle(const Multigraph &g, std::vector<EdgeId> edges) {
    if (edges.empty()) return {};
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return {};
    if (edges.size() == 1) return is_cycle(g, edges) ? edges : Cycle{};
    for (EdgeId e : edges)
        if (e < 0 || e >= g.edge_count() || g.edge(e).is_loop()) return {};

    Cycle out{edges[0]};
    std::vector<char> used(edges.size(), 0);
    used[0] = 1;
    Vertex cur = g.edge(edges[0]).v;
    for (std::size_t step = 1; step < edges.size(); ++step) {
        std::size_t next = edges.size();
        for (std::size_t i = 0; i < edges.size() && next == edges.size(); ++i)
            if (!used[i] && (g.edge(edges[i]).u == cur || g.edge(edges[i]).v == cur)) next = i;
        if (next == edges.size()) return {};
        used[next] = 1;
        out.push_back(edges[next]);
        cur = g.edge(edges[next]).other(cur);
    }
    return is_cycle(g, out) ? out : Cycle{};
}

bool is_cycle_packing(const Multigraph &g, const std::vector<Cycle> &cycles) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Cycle &c : cycles) {
        if (!is_cycle(g, c)) return false;
        for (Vertex v : cycle_vertices(g, c))
            if (used[v]++) return false;
    }
    return true;
}

}  // namespace jones
