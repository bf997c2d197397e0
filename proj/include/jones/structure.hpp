#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jones/multigraph.hpp"

namespace jones {

// ---- connectivity -------------------------------------------------------

/// 0 for disconnected graphs and for graphs with fewer than two vertices.
int edge_connectivity(const Multigraph &g);
/// Computed on the underlying simple graph; a complete graph K_n gives n-1.
int vertex_connectivity(const Multigraph &g);

bool is_bridge(const Multigraph &g, EdgeId e);

// ---- cuts ---------------------------------------------------------------

/// A minimal edge cut (bond): removing `edges` splits one component of the
/// carrier into exactly side_a and side_b, and every cut edge joins the two
/// sides. side_a holds the smallest vertex of the split component.
struct EdgeCut {
    EdgeSet edges;
    VertexSet side_a;
    VertexSet side_b;
    bool trivial = false;  // some side has at most one vertex
    bool cyclic = false;   // both sides contain a cycle

    bool operator==(const EdgeCut &) const = default;
};

/// Checks the bond property for an arbitrary edge set.
std::optional<EdgeCut> as_minimal_cut(const Multigraph &g, const EdgeSet &f);

/// All minimal cuts with exactly k edges (k in 1..3), in lexicographic
/// order of their edge ids.
std::vector<EdgeCut> enumerate_cuts(const Multigraph &g, int k);

bool is_essentially_4ec(const Multigraph &g);
/// No two vertex-disjoint cycles means no cut can leave two cyclic sides,
/// so such graphs count as cyclically 4-edge-connected.
bool is_cyclically_4ec(const Multigraph &g);

// ---- embeddings ---------------------------------------------------------

/// Edge-ends are numbered 2*e + s, where s = 0 is the end at edge(e).u and
/// s = 1 the end at edge(e).v. A dart with the same number leaves through
/// that end.
using EdgeEnd = int;

inline constexpr EdgeId end_edge(EdgeEnd h) { return h / 2; }
inline constexpr EdgeEnd opposite_end(EdgeEnd h) { return h ^ 1; }
Vertex end_vertex(const Multigraph &g, EdgeEnd h);

class InvalidRotation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPlanar : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RotationSystem {
    /// order[v] is the clockwise cyclic order of edge-ends at v.
    std::vector<std::vector<EdgeEnd>> order;

    bool operator==(const RotationSystem &) const = default;
};

/// Throws InvalidRotation unless every edge-end appears exactly once, at
/// its own vertex.
void validate_rotation(const Multigraph &g, const RotationSystem &rot);

/// "v: e_id e_id ..." per vertex, loops listing their id twice.
std::string format_rotation(const Multigraph &g, const RotationSystem &rot);
RotationSystem parse_rotation(const Multigraph &g, std::string_view text);

bool is_planar(const Multigraph &g);
/// Throws NotPlanar. Parallel edges sit next to each other (increasing ids
/// at the lower-numbered endpoint, decreasing at the other); loops follow
/// the vertex's simple edges.
RotationSystem planar_embedding(const Multigraph &g);

struct Face {
    std::vector<EdgeEnd> walk;  // darts in traversal order
    VertexSet boundary;
    bool is_cycle = false;  // walk visits no vertex and no edge twice

    std::vector<EdgeId> edges() const;
};

/// Face tracing: after arriving through end h at vertex w, continue with the
/// end following h in w's rotation. Isolated vertices contribute no faces.
std::vector<Face> faces(const Multigraph &g, const RotationSystem &rot);

}  // namespace jones
