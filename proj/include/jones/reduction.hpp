#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jones/multigraph.hpp"
#include "jones/solvers.hpp"
#include "jones/structure.hpp"

namespace jones {

// ---- low-degree reductions ----------------------------------------------

/// G' = G - v + uw for a degree-2 vertex v with neighbours u and w. When
/// u = w the new edge is a loop at u.
struct Suppression {
    Multigraph graph;
    Relabeling map;   // new edge maps to kNone
    Vertex v = kNone;  // in the parent
    Vertex u = kNone, w = kNone;  // in the parent
    EdgeId via_u = kNone, via_w = kNone;  // parent edges vu and vw
    EdgeId new_edge = kNone;  // in graph

    Cycle cycle_to_child(const Multigraph &parent, const Cycle &c) const;
    Cycle cycle_to_parent(const Multigraph &parent, const Cycle &c) const;
    /// Same size: the cycles correspond one to one.
    VertexSet fvs_to_parent(const VertexSet &s) const;
    /// (S \ {v}) + {u} when v is in S.
    VertexSet fvs_to_child(const VertexSet &s) const;
};

Suppression suppress_degree2(const Multigraph &g, Vertex v);

/// Repeatedly deletes vertices of degree at most 1.
Edited delete_degree_le1(const Multigraph &g);

// ---- cut decompositions -------------------------------------------------

enum class DecompositionKind { low_degree, components, bridge, cut2, cut3 };

std::string_view kind_name(DecompositionKind k);

/// A graph derived from the parent. Vertices and edges map back through
/// `map`; virtual edges and the contracted vertex map to kNone.
struct Part {
    std::string name;
    Multigraph graph;
    Relabeling map;
    std::vector<EdgeId> virtual_edges;
    std::vector<std::string> virtual_tags;  // which cut edges each one replaces
    /// low_degree only: the parent path each edge stands for.
    std::vector<std::vector<EdgeId>> edge_paths;
};

/// A cut edge with its endpoint on side 1 (G1) and side 2 (G2).
struct BoundaryEdge {
    char label = '?';
    EdgeId edge = kNone;
    Vertex end1 = kNone, end2 = kNone;
};

/// G1 is the parent minus side_b of the cut, G2 is side_b; for a connected
/// parent these are the two components of G - cut.
///
/// bridge: G1, G2. cut2: G1, G2, G1', G2'. cut3: G1, G2 and for i = 1, 2 the
/// graphs Gi^ABC (other side contracted to a vertex x, the last vertex) and
/// Gi^AB, Gi^AC, Gi^BC (Gi plus an edge joining the named boundary ends).
/// Cut edges are labelled A, B, C in increasing id order.
struct Decomposition {
    DecompositionKind kind = DecompositionKind::bridge;
    Multigraph parent;
    EdgeCut cut;
    std::vector<BoundaryEdge> boundary;
    std::vector<Part> parts;

    const Part &part(std::string_view name) const;
};

/// Deletes degree <= 1 vertices and suppresses degree-2 vertices until
/// neither applies; part "G'". Empty when nothing changes.
std::optional<Decomposition> reduce_low_degree(const Multigraph &g);
/// One part per component, named "C1", "C2", ...
Decomposition split_components(const Multigraph &g);
Decomposition split_bridge(const Multigraph &g, EdgeId e);
Decomposition split_2cut(const Multigraph &g, const EdgeCut &cut);
Decomposition decompose_3cut(const Multigraph &g, const EdgeCut &cut);

/// Name of the pair part on side i (1 or 2) that joins every label but
/// `missing`: pair_part_name(1, 'C') is "G1^AB".
std::string pair_part_name(int side, char missing);

// ---- witness lifting ----------------------------------------------------

/// p1 on G1', p2 on G2'. Two virtual-edge cycles merge into one parent cycle
/// through both cut edges; otherwise only non-virtual cycles transfer.
CyclePacking combine_packings_2cut(const Decomposition &d, const CyclePacking &p1, const CyclePacking &p2);

/// Joins a cycle through the virtual edge of part a with one through the
/// virtual edge of part b into a parent cycle crossing cut edges e and f.
Cycle merge_through_cut(const Decomposition &d, const Part &a, const Cycle &ca, const Part &b, const Cycle &cb,
                        const BoundaryEdge &e, const BoundaryEdge &f);

/// S1' on G1' together with S2 on G2 (or the symmetric pair) is a parent
/// feedback set.
FeedbackSet lift_fvs_2cut(const Decomposition &d, int side_with_virtual, const FeedbackSet &s_virtual,
                          const FeedbackSet &s_plain);

/// The vertex shared by the three pairwise paths of a tree. Throws
/// invalid_argument if t is not a forest or the vertices are not in one tree.
Vertex tree_median(const Multigraph &t, Vertex u, Vertex v, Vertex w);

/// s_abc on Gi^ABC, s_other on G(3-i). If x is in s_abc, at most one vertex
/// of the other side is added to break the boundary connections left by the
/// surviving forest. Result is rechecked.
FeedbackSet lift_fvs_3cut(const Decomposition &d, int side, const FeedbackSet &s_abc, const FeedbackSet &s_other);

/// For item (i): given s_pair on Gi^(ABC-x), the label y != x whose pair
/// part must be solved on the other side.
char partner_label(const Decomposition &d, int side, char x, const VertexSet &s_pair);

/// s_pair on Gi^(ABC-x), s_partner on G(3-i)^(ABC-y) with y from
/// partner_label. Result is rechecked.
FeedbackSet lift_fvs_3cut_pair(const Decomposition &d, int side, char x, const FeedbackSet &s_pair,
                               const FeedbackSet &s_partner);

// ---- certificates -------------------------------------------------------

struct Inequality {
    std::string label;   // "a".."f" or a named inequality
    std::string detail;  // e.g. "fvs(G) <= fvs(G1^ABC) + fvs(G2)"
    int left = 0;
    std::string relation;  // "<=", ">=", "=", "implies"
    int right = 0;
    bool holds = false;
};

struct Certificate {
    DecompositionKind kind = DecompositionKind::bridge;
    std::vector<Inequality> items;
    /// Minimal-counterexample equations, recorded but never asserted.
    std::vector<Inequality> informational;
    bool lifts_verified = true;

    bool holds() const;
};

Certificate check_bridge_certificate(const Decomposition &d, const SolverLimits &limits = {});
Certificate check_cut2_certificate(const Decomposition &d, const SolverLimits &limits = {});
Certificate check_cut3_certificate(const Decomposition &d, const SolverLimits &limits = {});
Certificate check_certificate(const Decomposition &d, const SolverLimits &limits = {});

// ---- pipeline -----------------------------------------------------------

enum class LeafClass { acyclic, essentially_4ec, small, unresolved };

std::string_view leaf_class_name(LeafClass c);

struct PipelineNode {
    int id = 0;
    int parent = -1;
    Multigraph graph;
    std::optional<DecompositionKind> kind;  // empty for a leaf
    std::vector<int> children;
    std::optional<Certificate> certificate;
    std::optional<LeafClass> leaf;
};

struct PipelineResult {
    std::vector<PipelineNode> nodes;  // nodes[0] is the input
    bool witnesses_verified = true;

    int decomposition_count() const;
    std::vector<const PipelineNode *> leaves() const;
};

/// Order per node: acyclic leaf; delete degree <= 1 and suppress degree-2
/// vertices; essentially 4-edge-connected leaf; split components; bridge;
/// 2-edge-cut; nontrivial 3-edge-cut. Leaves with at most 4 vertices that
/// admit none of these are `small`.
PipelineResult reduce_pipeline(const Multigraph &g, const SolverLimits &limits = {});

}  // namespace jones
