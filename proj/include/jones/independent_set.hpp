#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "jones/limits.hpp"

namespace jones {

/// Undirected simple graph over items 0..size-1; an edge marks two items
/// that cannot be chosen together.
class ConflictGraph {
public:
    explicit ConflictGraph(int size);

    int size() const { return static_cast<int>(adj_.size()); }
    void add_conflict(int a, int b);
    bool conflicts(int a, int b) const { return adj_[a][b]; }
    const boost::dynamic_bitset<> &row(int a) const { return adj_[a]; }

private:
    std::vector<boost::dynamic_bitset<>> adj_;
};

/// Maximum independent set by branch and bound: greedy min-degree start,
/// then a clique search in the complement bounded by greedy clique covers of
/// the candidate set. Returns ascending item indices.
std::vector<int> maximum_independent_set(const ConflictGraph &g, const Deadline &deadline = {});

}  // namespace jones
