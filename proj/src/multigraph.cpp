#include "jones/multigraph.hpp"

#include "jones/detail/union_find.hpp"

#include <numeric>
#include <string>

namespace jones {

using detail::UnionFind;

namespace {

[[noreturn]] void out_of_range(const char *what, int value) {
    throw std::out_of_range(std::string(what) + " index out of range: " + std::to_string(value));
}

}  // namespace

Multigraph::Multigraph(int vertex_count) : Multigraph(vertex_count, {}) {}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge &ed = edges_[e];
        check_vertex(ed.u);
        check_vertex(ed.v);
        incidence_[ed.u].push_back(static_cast<EdgeId>(e));
        incidence_[ed.v].push_back(static_cast<EdgeId>(e));
    }
}

void Multigraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) out_of_range("vertex", v);
}

int Multigraph::loop_count(Vertex v) const {
    int loops = 0;
    for (EdgeId e : incident(v))
        if (edges_[e].is_loop()) ++loops;
    return loops / 2;
}

int Multigraph::multiplicity(Vertex a, Vertex b) const {
    if (a == b) return loop_count(a);
    int count = 0;
    for (EdgeId e : incident(a))
        if (edges_[e].other(a) == b) ++count;
    return count;
}

bool Multigraph::is_simple() const {
    for (Vertex v = 0; v < n_; ++v) {
        std::vector<Vertex> nbrs;
        for (EdgeId e : incidence_[v]) {
            if (edges_[e].is_loop()) return false;
            nbrs.push_back(edges_[e].other(v));
        }
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
    }
    return true;
}

VertexSet Relabeling::vertices_to_parent(const VertexSet &s) const {
    std::vector<int> out;
    for (Vertex v : s) {
        Vertex p = vertex_to_parent.at(static_cast<std::size_t>(v));
        if (p != kNone) out.push_back(p);
    }
    return VertexSet(std::move(out));
}

std::vector<EdgeId> Relabeling::edges_to_parent(std::span<const EdgeId> edges) const {
    std::vector<EdgeId> out;
    out.reserve(edges.size());
    for (EdgeId e : edges) out.push_back(edge_to_parent.at(static_cast<std::size_t>(e)));
    return out;
}

Edited induced_subgraph(const Multigraph &g, const VertexSet &keep) {
    for (Vertex v : keep)
        if (!g.has_vertex(v)) out_of_range("vertex", v);
    std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), kNone);
    Relabeling map;
    for (Vertex v : keep) {
        index[v] = static_cast<Vertex>(map.vertex_to_parent.size());
        map.vertex_to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge &ed = g.edge(e);
        if (index[ed.u] == kNone || index[ed.v] == kNone) continue;
        edges.push_back({index[ed.u], index[ed.v]});
        map.edge_to_parent.push_back(e);
    }
    return {Multigraph(static_cast<int>(keep.size()), std::move(edges)), std::move(map)};
}

Edited delete_vertices(const Multigraph &g, const VertexSet &w) {
    for (Vertex v : w)
        if (!g.has_vertex(v)) out_of_range("vertex", v);
    std::vector<int> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!w.contains(v)) keep.push_back(v);
    return induced_subgraph(g, VertexSet(std::move(keep)));
}

Edited delete_edges(const Multigraph &g, const EdgeSet &f) {
    for (EdgeId e : f)
        if (e < 0 || e >= g.edge_count()) out_of_range("edge", e);
    Relabeling map;
    map.vertex_to_parent.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(map.vertex_to_parent.begin(), map.vertex_to_parent.end(), 0);
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (f.contains(e)) continue;
        edges.push_back(g.edge(e));
        map.edge_to_parent.push_back(e);
    }
    return {Multigraph(g.vertex_count(), std::move(edges)), std::move(map)};
}

Multigraph add_edge(const Multigraph &g, Vertex u, Vertex v) {
    if (!g.has_vertex(u)) out_of_range("vertex", u);
    if (!g.has_vertex(v)) out_of_range("vertex", v);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back({u, v});
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph add_isolated_vertices(const Multigraph &g, int k) {
    if (k < 0) throw std::invalid_argument("negative vertex count");
    return Multigraph(g.vertex_count() + k, std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

Multigraph disjoint_union(const Multigraph &a, const Multigraph &b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    for (const Edge &e : b.edges()) edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
    return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Edited contract_side_to_vertex(const Multigraph &g, const VertexSet &keep) {
    for (Vertex v : keep)
        if (!g.has_vertex(v)) out_of_range("vertex", v);
    if (keep.empty() || static_cast<int>(keep.size()) == g.vertex_count())
        throw std::invalid_argument("contract_side_to_vertex: both sides must be nonempty");
    std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), kNone);
    Relabeling map;
    for (Vertex v : keep) {
        index[v] = static_cast<Vertex>(map.vertex_to_parent.size());
        map.vertex_to_parent.push_back(v);
    }
    const Vertex x = static_cast<Vertex>(keep.size());
    map.vertex_to_parent.push_back(kNone);
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge &ed = g.edge(e);
        const bool in_u = index[ed.u] != kNone;
        const bool in_v = index[ed.v] != kNone;
        if (!in_u && !in_v) continue;
        edges.push_back({in_u ? index[ed.u] : x, in_v ? index[ed.v] : x});
        map.edge_to_parent.push_back(e);
    }
    return {Multigraph(x + 1, std::move(edges)), std::move(map)};
}

int degree(const Multigraph &g, Vertex v) {
    if (!g.has_vertex(v)) out_of_range("vertex", v);
    return g.degree(v);
}

int max_degree(const Multigraph &g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_subcubic(const Multigraph &g) { return max_degree(g) <= 3; }

bool is_cubic(const Multigraph &g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

std::vector<int> component_labels(const Multigraph &g) {
    UnionFind uf(g.vertex_count());
    for (const Edge &e : g.edges()) uf.unite(e.u, e.v);
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), kNone);
    std::vector<int> root_label(static_cast<std::size_t>(g.vertex_count()), kNone);
    int next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        if (root_label[r] == kNone) root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

std::vector<VertexSet> components(const Multigraph &g) {
    std::vector<int> label = component_labels(g);
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.vertex_count(); ++v) groups[label[v]].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(groups.size());
    for (auto &grp : groups) out.emplace_back(std::move(grp));
    return out;
}

int component_count(const Multigraph &g) {
    UnionFind uf(g.vertex_count());
    int count = g.vertex_count();
    for (const Edge &e : g.edges())
        if (uf.unite(e.u, e.v)) --count;
    return count;
}

bool is_connected(const Multigraph &g) { return component_count(g) <= 1; }

bool is_forest(const Multigraph &g) {
    UnionFind uf(g.vertex_count());
    for (const Edge &e : g.edges())
        if (!uf.unite(e.u, e.v)) return false;  // loops and parallel pairs land here too
    return true;
}

Multigraph permute(const Multigraph &g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge &e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace jones
