#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace jones {

using Vertex = int;
using EdgeId = int;

inline constexpr int kNone = -1;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const Edge &) const = default;
};

/// Sorted, duplicate-free list of indices. The tag keeps vertex and edge
/// sets from being mixed up.
template <class Tag>
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> items) : items_(items) { normalize(); }
    explicit IndexSet(std::vector<int> items) : items_(std::move(items)) { normalize(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    int operator[](std::size_t i) const { return items_[i]; }
    const std::vector<int> &items() const { return items_; }

    bool contains(int x) const { return std::binary_search(items_.begin(), items_.end(), x); }
    void insert(int x) {
        auto it = std::lower_bound(items_.begin(), items_.end(), x);
        if (it == items_.end() || *it != x) items_.insert(it, x);
    }
    void erase(int x) {
        auto it = std::lower_bound(items_.begin(), items_.end(), x);
        if (it != items_.end() && *it == x) items_.erase(it);
    }

    bool operator==(const IndexSet &) const = default;
    auto operator<=>(const IndexSet &) const = default;

private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<int> items_;
};

using VertexSet = IndexSet<struct VertexTag>;
using EdgeSet = IndexSet<struct EdgeTag>;

/// Undirected multigraph with loops and parallel edges. Edge ids are the
/// positions in the edge list, so they are dense in [0, edge_count). A loop
/// appears twice in the incidence list of its vertex.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge &edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }

    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int loop_count(Vertex v) const;
    int multiplicity(Vertex a, Vertex b) const;
    bool is_simple() const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    bool operator==(const Multigraph &o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Maps every vertex and edge of a derived graph to its origin in the parent
/// graph. kNone marks elements that did not exist in the parent.
struct Relabeling {
    std::vector<Vertex> vertex_to_parent;
    std::vector<EdgeId> edge_to_parent;

    VertexSet vertices_to_parent(const VertexSet &s) const;
    std::vector<EdgeId> edges_to_parent(std::span<const EdgeId> edges) const;
};

struct Edited {
    Multigraph graph;
    Relabeling map;
};

Edited delete_vertices(const Multigraph &g, const VertexSet &w);
Edited delete_edges(const Multigraph &g, const EdgeSet &f);
Edited induced_subgraph(const Multigraph &g, const VertexSet &keep);

/// The new edge gets id edge_count(g).
Multigraph add_edge(const Multigraph &g, Vertex u, Vertex v);
Multigraph add_isolated_vertices(const Multigraph &g, int k);
Multigraph disjoint_union(const Multigraph &a, const Multigraph &b);

/// g[keep] plus one new vertex x (the last vertex) standing in for the rest.
/// Every edge with exactly one endpoint in keep is redirected to x; edges
/// inside the contracted side vanish.
Edited contract_side_to_vertex(const Multigraph &g, const VertexSet &keep);

int degree(const Multigraph &g, Vertex v);
int max_degree(const Multigraph &g);
bool is_subcubic(const Multigraph &g);
bool is_cubic(const Multigraph &g);

std::vector<VertexSet> components(const Multigraph &g);
/// Component index per vertex, numbered by first vertex.
std::vector<int> component_labels(const Multigraph &g);
int component_count(const Multigraph &g);
bool is_connected(const Multigraph &g);
bool is_forest(const Multigraph &g);

/// Relabel vertices: vertex v of g becomes perm[v]. Edge order is preserved.
Multigraph permute(const Multigraph &g, std::span<const Vertex> perm);

}  // namespace jones
