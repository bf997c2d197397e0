#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jones/multigraph.hpp"

namespace jones {

/// Byte string that is equal for two multigraphs exactly when they are
/// isomorphic. Loop counts and edge multiplicities are part of the encoding.
struct CanonicalForm {
    std::string bytes;

    /// 16 hex digits (FNV-1a 64 of the bytes).
    std::string digest() const;

    bool operator==(const CanonicalForm &) const = default;
    auto operator<=>(const CanonicalForm &) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// labeling[v] is the canonical position of vertex v.
    std::vector<Vertex> labeling;
};

/// Individualization-refinement search over all leaves; the lexicographically
/// smallest upper-triangle multiplicity matrix wins. Exhaustive, so intended
/// for small graphs (n up to about 20).
CanonicalLabeling canonical_labeling(const Multigraph &g);
CanonicalForm canonical_form(const Multigraph &g);

/// g relabeled by its canonical labeling with edges sorted by (min, max)
/// endpoint. Isomorphic inputs give identical outputs.
Multigraph canonical_graph(const Multigraph &g);

bool isomorphic(const Multigraph &a, const Multigraph &b);

}  // namespace jones
