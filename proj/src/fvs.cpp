#include <algorithm>
#include <queue>
#include <stdexcept>

#include "jones/detail/fvs_greedy.hpp"
#include "jones/detail/union_find.hpp"
#include "jones/solvers.hpp"

namespace jones {

namespace {

// Working copy of the graph as a multiplicity matrix over the original
// vertex ids; the diagonal holds loop counts. Vertices are never renamed,
// so the chosen set is directly a witness for the input graph.
struct FvsState {
    int n = 0;
    std::vector<int> mult;
    std::vector<int> deg;
    std::vector<char> alive;
    std::vector<char> forbidden;  // decided to stay in the forest
    std::vector<Vertex> taken;

    explicit FvsState(const Multigraph &g)
        : n(g.vertex_count()),
          mult(static_cast<std::size_t>(n * n), 0),
          deg(static_cast<std::size_t>(n), 0),
          alive(static_cast<std::size_t>(n), 1),
          forbidden(static_cast<std::size_t>(n), 0) {
        for (const Edge &e : g.edges()) {
            if (e.is_loop()) {
                ++at(e.u, e.u);
            } else {
                ++at(e.u, e.v);
                ++at(e.v, e.u);
            }
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }

    int &at(Vertex a, Vertex b) { return mult[static_cast<std::size_t>(a * n + b)]; }
    int at(Vertex a, Vertex b) const { return mult[static_cast<std::size_t>(a * n + b)]; }

    void remove(Vertex v) {
        for (Vertex u = 0; u < n; ++u) {
            if (u == v || !alive[u]) continue;
            int k = at(v, u);
            if (k == 0) continue;
            deg[u] -= k;
            at(v, u) = at(u, v) = 0;
        }
        at(v, v) = 0;
        deg[v] = 0;
        alive[v] = 0;
    }

    void take(Vertex v) {
        taken.push_back(v);
        remove(v);
    }

    // Applies forced moves until none is left. False means no feedback set
    // is compatible with the forbidden vertices.
    bool reduce() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                if (at(v, v) > 0) {
                    if (forbidden[v]) return false;
                    take(v);
                    changed = true;
                    continue;
                }
                if (deg[v] <= 1) {
                    remove(v);
                    changed = true;
                    continue;
                }
                // A double edge to a forbidden vertex is a 2-cycle only v can break.
                bool forced = false;
                for (Vertex u = 0; u < n && !forced; ++u) {
                    if (u == v || !alive[u] || !forbidden[u] || at(v, u) < 2) continue;
                    if (forbidden[v]) return false;
                    forced = true;
                }
                if (forced) {
                    take(v);
                    changed = true;
                    continue;
                }
                if (deg[v] == 2) {
                    Vertex a = kNone, b = kNone;
                    for (Vertex u = 0; u < n; ++u) {
                        if (u == v || !alive[u] || at(v, u) == 0) continue;
                        (a == kNone ? a : b) = u;
                    }
                    if (b == kNone) {
                        // Both edges go to a: every cycle through v passes a.
                        take(a);
                        changed = true;
                    } else if (forbidden[v] || !forbidden[a] || !forbidden[b]) {
                        remove(v);
                        ++at(a, b);
                        ++at(b, a);
                        deg[a] += 1;
                        deg[b] += 1;
                        changed = true;
                    }
                }
            }
        }
        detail::UnionFind uf(n);
        for (Vertex a = 0; a < n; ++a) {
            if (!alive[a] || !forbidden[a]) continue;
            for (Vertex b = a + 1; b < n; ++b) {
                if (!alive[b] || !forbidden[b] || at(a, b) == 0) continue;
                if (at(a, b) >= 2 || !uf.unite(a, b)) return false;
            }
        }
        return true;
    }

    int cyclomatic_number() const {
        int vertices = 0, edges = 0;
        detail::UnionFind uf(n);
        int comps = 0;
        for (Vertex a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            ++vertices;
            ++comps;
            edges += at(a, a);
            for (Vertex b = a + 1; b < n; ++b) {
                if (!alive[b] || at(a, b) == 0) continue;
                edges += at(a, b);
                if (uf.unite(a, b)) --comps;
            }
        }
        return edges - vertices + comps;
    }

    // Shortest cycle through live vertices (after reduce there are no loops).
    std::vector<Vertex> shortest_cycle(const std::vector<char> &live) const {
        std::vector<Vertex> best;
        std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
        for (Vertex s = 0; s < n; ++s) {
            if (!live[s]) continue;
            for (Vertex u = 0; u < n; ++u)
                if (live[u] && u != s && at(s, u) >= 2) return {s, u};
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent[s] = kNone;
            std::queue<Vertex> q;
            q.push(s);
            bool found = false;
            while (!q.empty() && !found) {
                Vertex a = q.front();
                q.pop();
                if (!best.empty() && 2 * dist[a] + 1 >= static_cast<int>(best.size())) break;
                for (Vertex b = 0; b < n && !found; ++b) {
                    if (!live[b] || b == a || at(a, b) == 0 || b == parent[a]) continue;
                    if (dist[b] == -1) {
                        dist[b] = dist[a] + 1;
                        parent[b] = a;
                        q.push(b);
                    } else {
                        // Cycle through s unless the two tree paths meet earlier;
                        // either way the vertex set holds a cycle.
                        std::vector<Vertex> path_a, path_b;
                        for (Vertex x = a; x != kNone; x = parent[x]) path_a.push_back(x);
                        for (Vertex x = b; x != kNone; x = parent[x]) path_b.push_back(x);
                        std::vector<Vertex> cyc = path_a;
                        cyc.insert(cyc.end(), path_b.begin(), path_b.end());
                        std::sort(cyc.begin(), cyc.end());
                        cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
                        if (best.empty() || cyc.size() < best.size()) best = cyc;
                        found = true;
                    }
                }
            }
        }
        return best;
    }

    int disjoint_cycle_bound() const {
        std::vector<char> live(alive);
        int count = 0;
        while (true) {
            std::vector<Vertex> cyc = shortest_cycle(live);
            if (cyc.empty()) return count;
            ++count;
            for (Vertex v : cyc) live[v] = 0;
        }
    }

    int lower_bound() const {
        int mu = cyclomatic_number();
        if (mu == 0) return 0;
        int max_deg = 0;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && !forbidden[v]) max_deg = std::max(max_deg, deg[v]);
        int bound = max_deg > 1 ? (mu + max_deg - 2) / (max_deg - 1) : 1;
        return std::max(bound, disjoint_cycle_bound());
    }

    Vertex branch_vertex() const {
        Vertex pick = kNone;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && !forbidden[v] && (pick == kNone || deg[v] > deg[pick])) pick = v;
        return pick;
    }
};

class FvsSearch {
public:
    FvsSearch(const Multigraph &g, const Deadline &deadline) : g_(g), deadline_(deadline) {}

    VertexSet run() {
        best_ = detail::greedy_feedback_set(g_).items();
        FvsState root(g_);
        search(std::move(root));
        return VertexSet(best_);
    }

private:
    void search(FvsState state) {
        deadline_.poll(nodes_);
        if (!state.reduce()) return;
        if (static_cast<int>(state.taken.size()) >= static_cast<int>(best_.size())) return;
        if (state.cyclomatic_number() == 0) {
            best_ = state.taken;
            return;
        }
        if (static_cast<int>(state.taken.size()) + state.lower_bound() >= static_cast<int>(best_.size())) return;
        Vertex v = state.branch_vertex();
        if (v == kNone) return;
        FvsState keep = state;
        state.take(v);
        search(std::move(state));
        keep.forbidden[v] = 1;
        search(std::move(keep));
    }

    const Multigraph &g_;
    const Deadline &deadline_;
    std::vector<Vertex> best_;
    std::size_t nodes_ = 0;
};

}  // namespace

namespace detail {

VertexSet greedy_feedback_set(const Multigraph &g) {
    FvsState state(g);
    while (true) {
        state.reduce();
        if (state.cyclomatic_number() == 0) break;
        state.take(state.branch_vertex());
    }
    return VertexSet(state.taken);
}

}  // namespace detail

FeedbackSet fvs_exact(const Multigraph &g, const SolverLimits &limits) {
    FeedbackSet out;
    out.vertices = FvsSearch(g, limits.deadline).run();
    out.size = static_cast<int>(out.vertices.size());
    out.optimal = true;
    if (!is_feedback_set(g, out.vertices)) throw std::logic_error("fvs_exact produced an invalid feedback set");
    return out;
}

FeedbackSet fvs_bruteforce(const Multigraph &g) {
    const int n = g.vertex_count();
    if (n > kFvsOracleMaxVertices)
        throw GuardExceeded("fvs_bruteforce accepts at most " + std::to_string(kFvsOracleMaxVertices) + " vertices");
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            VertexSet s{std::vector<int>(idx)};
            if (is_feedback_set(g, s)) return {s, k, true};
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    throw std::logic_error("unreachable: the full vertex set is a feedback set");
}

}  // namespace jones
