#include <algorithm>

#include "jones/detail/union_find.hpp"
#include "jones/structure.hpp"

namespace jones {

std::optional<EdgeCut> as_minimal_cut(const Multigraph &g, const EdgeSet &f) {
    if (f.empty()) return std::nullopt;
    for (EdgeId e : f) {
        if (e < 0 || e >= g.edge_count()) throw std::out_of_range("edge index out of range: " + std::to_string(e));
        if (g.edge(e).is_loop()) return std::nullopt;
    }
    detail::UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!f.contains(e)) uf.unite(g.edge(e).u, g.edge(e).v);

    // Every cut edge must join the same two pieces, and those pieces must be
    // connected to each other only through the cut.
    int ra = uf.find(g.edge(f[0]).u), rb = uf.find(g.edge(f[0]).v);
    if (ra == rb) return std::nullopt;
    for (EdgeId e : f) {
        int a = uf.find(g.edge(e).u), b = uf.find(g.edge(e).v);
        if (!((a == ra && b == rb) || (a == rb && b == ra))) return std::nullopt;
    }

    EdgeCut cut;
    cut.edges = f;
    std::vector<int> a_side, b_side;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        if (r == ra) a_side.push_back(v);
        else if (r == rb) b_side.push_back(v);
    }
    if (b_side.front() < a_side.front()) std::swap(a_side, b_side);
    cut.side_a = VertexSet(std::move(a_side));
    cut.side_b = VertexSet(std::move(b_side));
    cut.trivial = cut.side_a.size() <= 1 || cut.side_b.size() <= 1;

    // Each side is connected, so it holds a cycle iff it has at least as
    // many edges as vertices.
    std::size_t edges_a = 0, edges_b = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (f.contains(e)) continue;
        int r = uf.find(g.edge(e).u);
        if (r == ra) ++edges_a;
        else if (r == rb) ++edges_b;
    }
    if (uf.find(cut.side_a[0]) != ra) std::swap(edges_a, edges_b);
    cut.cyclic = edges_a >= cut.side_a.size() && edges_b >= cut.side_b.size();
    return cut;
}

std::vector<EdgeCut> enumerate_cuts(const Multigraph &g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("enumerate_cuts: k must be in 1..3");
    std::vector<EdgeId> candidates;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!g.edge(e).is_loop()) candidates.push_back(e);
    const int m = static_cast<int>(candidates.size());
    std::vector<EdgeCut> out;
    if (m < k) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> chosen;
        for (int i : idx) chosen.push_back(candidates[i]);
        if (auto cut = as_minimal_cut(g, EdgeSet(std::move(chosen)))) out.push_back(std::move(*cut));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

namespace {

// Per component: vertex count and whether it contains a cycle.
struct ComponentShape {
    int big = 0;     // components with at least two vertices
    int cyclic = 0;  // components containing a cycle
};

ComponentShape component_shape(const Multigraph &g) {
    std::vector<int> label = component_labels(g);
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<int> vertices(static_cast<std::size_t>(count), 0), edges(static_cast<std::size_t>(count), 0);
    for (int l : label) ++vertices[l];
    for (const Edge &e : g.edges()) ++edges[label[e.u]];
    ComponentShape s;
    for (int c = 0; c < count; ++c) {
        if (vertices[c] >= 2) ++s.big;
        if (edges[c] >= vertices[c]) ++s.cyclic;
    }
    return s;
}

}  // namespace

bool is_essentially_4ec(const Multigraph &g) {
    if (component_shape(g).big >= 2) return false;
    for (int k = 1; k <= 3; ++k)
        for (const EdgeCut &cut : enumerate_cuts(g, k))
            if (!cut.trivial) return false;
    return true;
}

bool is_cyclically_4ec(const Multigraph &g) {
    if (component_shape(g).cyclic >= 2) return false;
    for (int k = 1; k <= 3; ++k)
        for (const EdgeCut &cut : enumerate_cuts(g, k))
            if (cut.cyclic) return false;
    return true;
}

}  // namespace jones
