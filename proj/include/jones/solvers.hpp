#pragma once

#include <vector>

#include "jones/limits.hpp"
#include "jones/multigraph.hpp"
#include "jones/structure.hpp"

namespace jones {

/// A cycle as its edges in walk order. Loops are cycles of length 1, two
/// parallel edges a cycle of length 2.
using Cycle = std::vector<EdgeId>;

struct FeedbackSet {
    VertexSet vertices;
    int size = 0;
    bool optimal = false;
};

struct CyclePacking {
    std::vector<Cycle> cycles;
    int size = 0;
    bool optimal = false;
};

struct FacePacking {
    std::vector<int> face_indices;  // into faces(g, rot)
    std::vector<Face> faces;
    int size = 0;
};

// ---- witness checks -----------------------------------------------------

bool is_feedback_set(const Multigraph &g, const VertexSet &s);
/// Edges form one closed walk that repeats no vertex and no edge.
bool is_cycle(const Multigraph &g, const Cycle &c);
VertexSet cycle_vertices(const Multigraph &g, const Cycle &c);
/// Puts an unordered edge set into walk order; empty if it is not a cycle.
Cycle arrange_cycle(const Multigraph &g, std::vector<EdgeId> edges);
bool is_cycle_packing(const Multigraph &g, const std::vector<Cycle> &cycles);

// ---- solvers ------------------------------------------------------------

/// Branch and bound with forced-vertex and degree reductions; lower bounds
/// from greedy disjoint cycles and the cyclomatic number.
FeedbackSet fvs_exact(const Multigraph &g, const SolverLimits &limits = {});

inline constexpr int kFvsOracleMaxVertices = 16;
/// Subsets in increasing size, lexicographic within a size.
FeedbackSet fvs_bruteforce(const Multigraph &g);

/// Every simple cycle exactly once, grouped by smallest vertex. Throws
/// LimitExceeded past `cap` cycles.
std::vector<Cycle> enumerate_cycles(const Multigraph &g, std::size_t cap = kDefaultCycleCap);

/// Maximum independent set over the cycle conflict graph; falls back to
/// vertex branching when the cycle cap trips.
CyclePacking cp_exact(const Multigraph &g, const SolverLimits &limits = {});

inline constexpr std::size_t kCpOracleMaxCycles = 20;
CyclePacking cp_bruteforce(const Multigraph &g);

/// Maximum set of pairwise vertex-disjoint faces whose boundary is a cycle,
/// for the embedding given by rot.
FacePacking fp_fixed_embedding(const Multigraph &g, const RotationSystem &rot, const Deadline &deadline = {});

}  // namespace jones
