#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace jones::detail {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Smaller root wins, so roots double as the minimum vertex of a class.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }

    std::vector<int> parent;
};

}  // namespace jones::detail
