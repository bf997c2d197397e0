#include <algorithm>
#include <queue>

#include "jones/detail/union_find.hpp"
#include "jones/structure.hpp"

namespace jones {

namespace {

// Unit-capacity max flow on a dense capacity matrix; graphs here are tiny.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : n_(n), cap_(static_cast<std::size_t>(n * n), 0) {}

    void add(int a, int b, int c) { cap_[static_cast<std::size_t>(a * n_ + b)] += c; }

    int max_flow(int s, int t, int limit) {
        std::vector<int> residual = cap_;
        int flow = 0;
        std::vector<int> prev(static_cast<std::size_t>(n_));
        while (flow < limit) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev[t] == -1) {
                int a = q.front();
                q.pop();
                for (int b = 0; b < n_; ++b) {
                    if (prev[b] == -1 && residual[static_cast<std::size_t>(a * n_ + b)] > 0) {
                        prev[b] = a;
                        q.push(b);
                    }
                }
            }
            if (prev[t] == -1) break;
            for (int b = t; b != s; b = prev[b]) {
                residual[static_cast<std::size_t>(prev[b] * n_ + b)] -= 1;
                residual[static_cast<std::size_t>(b * n_ + prev[b])] += 1;
            }
            ++flow;
        }
        return flow;
    }

private:
    int n_;
    std::vector<int> cap_;
};

std::vector<std::vector<char>> simple_adjacency(const Multigraph &g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge &e : g.edges())
        if (!e.is_loop()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    return adj;
}

}  // namespace

int edge_connectivity(const Multigraph &g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return 0;
    FlowNetwork net(n);
    for (const Edge &e : g.edges()) {
        if (e.is_loop()) continue;
        net.add(e.u, e.v, 1);
        net.add(e.v, e.u, 1);
    }
    int best = g.edge_count();
    for (Vertex t = 1; t < n; ++t) best = std::min(best, net.max_flow(0, t, best));
    return best;
}

int vertex_connectivity(const Multigraph &g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return 0;
    auto adj = simple_adjacency(g);
    // Vertex v splits into v_in = v and v_out = v + n joined by capacity 1.
    FlowNetwork net(2 * n);
    for (Vertex v = 0; v < n; ++v) net.add(v, v + n, 1);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (adj[a][b]) net.add(a + n, b, n);
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!adj[s][t]) best = std::min(best, net.max_flow(s + n, t, best));
    return best;
}

bool is_bridge(const Multigraph &g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::out_of_range("edge index out of range: " + std::to_string(e));
    return as_minimal_cut(g, EdgeSet{e}).has_value();
}

}  // namespace jones
