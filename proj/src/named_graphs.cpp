#include "jones/named_graphs.hpp"

#include <charconv>
#include <string>

namespace jones::named {

namespace {

Multigraph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b});
    return Multigraph(n, std::move(edges));
}

}  // namespace

Multigraph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Multigraph(n, std::move(edges));
}

Multigraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

Multigraph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

Multigraph empty(int n) { return Multigraph(n); }

Multigraph wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i <= rim; ++i) edges.push_back({0, i});
    for (int i = 1; i <= rim; ++i) edges.push_back({i, i == rim ? 1 : i + 1});
    return Multigraph(rim + 1, std::move(edges));
}

Multigraph theta(int edges) {
    std::vector<Edge> list(static_cast<std::size_t>(edges), Edge{0, 1});
    return Multigraph(2, std::move(list));
}

Multigraph prism() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

Multigraph cube() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
            if ((v & bit) == 0) edges.push_back({v, v | bit});
    return Multigraph(8, std::move(edges));
}

Multigraph petersen() {
    return from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Multigraph dodecahedron() {
    // Outer 5-cycle, middle 10-cycle, inner 5-cycle.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 10; ++i) edges.push_back({5 + i, 5 + (i + 1) % 10});
    for (int i = 0; i < 5; ++i) edges.push_back({15 + i, 15 + (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + 2 * i});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + 2 * i + 1, 15 + i});
    return Multigraph(20, std::move(edges));
}

Multigraph diamond() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Multigraph double_diamond() {
    return from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {2, 6}, {3, 7}});
}

Multigraph bridged_triangles() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}); }

std::optional<Multigraph> by_name(std::string_view name) {
    if (name == "prism") return prism();
    if (name == "cube" || name == "q3") return cube();
    if (name == "petersen") return petersen();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "diamond") return diamond();
    if (name == "double-diamond") return double_diamond();
    if (name == "bridged-triangles") return bridged_triangles();
    if (name == "theta") return theta(3);
    if (name.size() >= 2) {
        int k = 0;
        auto digits = name.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) {
            switch (name[0]) {
            case 'k': return complete(k);
            case 'c': return k >= 3 ? std::optional(cycle(k)) : std::nullopt;
            case 'p': return path(k);
            case 'w': return k >= 3 ? std::optional(wheel(k)) : std::nullopt;
            default: break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace jones::named
