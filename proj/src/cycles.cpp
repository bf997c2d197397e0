#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "jones/detail/fvs_greedy.hpp"
#include "jones/independent_set.hpp"
#include "jones/solvers.hpp"

namespace jones {

namespace {

using Bits = boost::dynamic_bitset<>;

class CycleEnumerator {
public:
    CycleEnumerator(const Multigraph &g, std::size_t cap) : g_(g), cap_(cap), on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    std::vector<Cycle> run() {
        std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> parallel;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            const Edge &ed = g_.edge(e);
            if (!ed.is_loop()) parallel[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
        }
        for (root_ = 0; root_ < g_.vertex_count(); ++root_) {
            for (EdgeId e : g_.incident(root_))
                if (g_.edge(e).is_loop() && (out_.empty() || out_.back() != Cycle{e})) emit({e});
            for (auto it = parallel.lower_bound({root_, 0}); it != parallel.end() && it->first.first == root_; ++it) {
                const auto &ids = it->second;
                for (std::size_t i = 0; i < ids.size(); ++i)
                    for (std::size_t j = i + 1; j < ids.size(); ++j) emit({ids[i], ids[j]});
            }
            on_path_[root_] = 1;
            for (EdgeId e : g_.incident(root_)) {
                const Edge &ed = g_.edge(e);
                if (ed.is_loop()) continue;
                Vertex first = ed.other(root_);
                if (first < root_) continue;
                path_.push_back(e);
                on_path_[first] = 1;
                extend(first, first);
                on_path_[first] = 0;
                path_.pop_back();
            }
            on_path_[root_] = 0;
        }
        return std::move(out_);
    }

private:
    void emit(Cycle c) {
        if (out_.size() >= cap_) throw LimitExceeded("cycle count exceeds cap of " + std::to_string(cap_));
        out_.push_back(std::move(c));
    }

    // Each cycle of length >= 3 is found once: from its smallest vertex, in
    // the direction whose first neighbour is smaller than the last.
    void extend(Vertex cur, Vertex first) {
        for (EdgeId e : g_.incident(cur)) {
            const Edge &ed = g_.edge(e);
            if (ed.is_loop()) continue;
            Vertex w = ed.other(cur);
            if (w == root_) {
                if (path_.size() >= 2 && first < cur) {
                    Cycle c = path_;
                    c.push_back(e);
                    emit(std::move(c));
                }
                continue;
            }
            if (w < root_ || on_path_[w]) continue;
            on_path_[w] = 1;
            path_.push_back(e);
            extend(w, first);
            path_.pop_back();
            on_path_[w] = 0;
        }
    }

    const Multigraph &g_;
    std::size_t cap_;
    Vertex root_ = 0;
    std::vector<char> on_path_;
    Cycle path_;
    std::vector<Cycle> out_;
};

Bits vertex_mask(const Multigraph &g, const Cycle &c) {
    Bits mask(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : c) {
        mask.set(static_cast<std::size_t>(g.edge(e).u));
        mask.set(static_cast<std::size_t>(g.edge(e).v));
    }
    return mask;
}

// Drops cycles whose vertex set contains another cycle's vertex set; some
// maximum packing always avoids them.
std::vector<std::size_t> minimal_cycles(const std::vector<Bits> &masks) {
    std::vector<std::size_t> order(masks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return masks[a].count() < masks[b].count(); });
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        bool dominated = false;
        for (std::size_t k : kept)
            if (masks[k].is_subset_of(masks[i])) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Fallback search on the cycles themselves: the smallest remaining vertex is
// either deleted or covered by one of the cycles through it.
class PackingBrancher {
public:
    PackingBrancher(const Multigraph &g, const Deadline &deadline) : g_(g), deadline_(deadline) {}

    std::vector<Cycle> run() {
        std::vector<char> alive(static_cast<std::size_t>(g_.vertex_count()), 1);
        std::vector<Cycle> current;
        search(alive, current);
        return best_;
    }

private:
    Multigraph live_graph(const std::vector<char> &alive, Relabeling &map) const {
        std::vector<int> keep;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (alive[v]) keep.push_back(v);
        Edited sub = induced_subgraph(g_, VertexSet(std::move(keep)));
        map = std::move(sub.map);
        return std::move(sub.graph);
    }

    void prune_leaves(std::vector<char> &alive) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < g_.vertex_count(); ++v) {
                if (!alive[v]) continue;
                int d = 0;
                for (EdgeId e : g_.incident(v))
                    if (alive[g_.edge(e).other(v)]) ++d;
                if (d <= 1) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
    }

    void cycles_through(Vertex root, const std::vector<char> &alive, std::vector<Cycle> &out) const {
        std::vector<char> on_path(static_cast<std::size_t>(g_.vertex_count()), 0);
        Cycle path;
        on_path[root] = 1;
        auto extend = [&](auto &&self, Vertex cur) -> void {
            for (EdgeId e : g_.incident(cur)) {
                const Edge &ed = g_.edge(e);
                Vertex w = ed.other(cur);
                if (!alive[w]) continue;
                if (ed.is_loop()) {
                    if (cur == root && path.empty()) out.push_back({e});
                    continue;
                }
                if (w == root) {
                    if (!path.empty() && path.front() < e && (path.size() >= 2 || path.front() != e)) {
                        Cycle c = path;
                        c.push_back(e);
                        out.push_back(std::move(c));
                    }
                    continue;
                }
                if (on_path[w]) continue;
                on_path[w] = 1;
                path.push_back(e);
                self(self, w);
                path.pop_back();
                on_path[w] = 0;
            }
        };
        extend(extend, root);
        // A loop lists itself twice in the incidence list.
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    void search(std::vector<char> alive, std::vector<Cycle> &current) {
        deadline_.poll(nodes_);
        prune_leaves(alive);
        Relabeling map;
        Multigraph live = live_graph(alive, map);
        if (is_forest(live)) {
            if (current.size() > best_.size() || best_.empty()) best_ = current;
            return;
        }
        std::size_t upper = current.size() + detail::greedy_feedback_set(live).size();
        if (upper <= best_.size()) return;
        Vertex root = kNone;
        for (Vertex v = 0; v < g_.vertex_count() && root == kNone; ++v)
            if (alive[v]) root = v;
        std::vector<Cycle> through;
        cycles_through(root, alive, through);
        for (const Cycle &c : through) {
            std::vector<char> rest = alive;
            for (EdgeId e : c) rest[g_.edge(e).u] = rest[g_.edge(e).v] = 0;
            current.push_back(c);
            search(std::move(rest), current);
            current.pop_back();
        }
        alive[root] = 0;
        search(std::move(alive), current);
    }

    const Multigraph &g_;
    const Deadline &deadline_;
    std::vector<Cycle> best_;
    std::size_t nodes_ = 0;
};

CyclePacking finish_packing(const Multigraph &g, std::vector<Cycle> cycles, const char *who) {
    CyclePacking out;
    out.cycles = std::move(cycles);
    out.size = static_cast<int>(out.cycles.size());
    out.optimal = true;
    if (!is_cycle_packing(g, out.cycles)) throw std::logic_error(std::string(who) + " produced an invalid cycle packing");
    return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Multigraph &g, std::size_t cap) { return CycleEnumerator(g, cap).run(); }

CyclePacking cp_exact(const Multigraph &g, const SolverLimits &limits) {
    std::vector<Cycle> cycles;
    try {
        cycles = enumerate_cycles(g, limits.cycle_cap);
    } catch (const LimitExceeded &) {
        return finish_packing(g, PackingBrancher(g, limits.deadline).run(), "cp_exact fallback");
    }
    std::vector<Bits> masks;
    masks.reserve(cycles.size());
    for (const Cycle &c : cycles) masks.push_back(vertex_mask(g, c));
    std::vector<std::size_t> kept = minimal_cycles(masks);

    ConflictGraph conflicts(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (masks[kept[i]].intersects(masks[kept[j]])) conflicts.add_conflict(static_cast<int>(i), static_cast<int>(j));
    std::vector<Cycle> chosen;
    for (int i : maximum_independent_set(conflicts, limits.deadline)) chosen.push_back(cycles[kept[static_cast<std::size_t>(i)]]);
    return finish_packing(g, std::move(chosen), "cp_exact");
}

CyclePacking cp_bruteforce(const Multigraph &g) {
    std::vector<Cycle> cycles;
    try {
        cycles = enumerate_cycles(g, kCpOracleMaxCycles);
    } catch (const LimitExceeded &) {
        throw GuardExceeded("cp_bruteforce accepts at most " + std::to_string(kCpOracleMaxCycles) + " cycles");
    }
    std::vector<VertexSet> vsets;
    for (const Cycle &c : cycles) vsets.push_back(cycle_vertices(g, c));

    std::vector<std::size_t> best, current;
    std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);
    // Visits every packing: each cycle is either skipped or, when disjoint
    // from the current choice, taken.
    auto visit = [&](auto &&self, std::size_t i) -> void {
        if (i == cycles.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        self(self, i + 1);
        for (Vertex v : vsets[i])
            if (used[v]) return;
        for (Vertex v : vsets[i]) used[v] = 1;
        current.push_back(i);
        self(self, i + 1);
        current.pop_back();
        for (Vertex v : vsets[i]) used[v] = 0;
    };
    visit(visit, 0);
    std::vector<Cycle> chosen;
    for (std::size_t i : best) chosen.push_back(cycles[i]);
    return finish_packing(g, std::move(chosen), "cp_bruteforce");
}

FacePacking fp_fixed_embedding(const Multigraph &g, const RotationSystem &rot, const Deadline &deadline) {
    std::vector<Face> all = faces(g, rot);

    // Planar iff every component with edges has V - E + F = 2.
    std::vector<int> label = component_labels(g);
    int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<int> euler(static_cast<std::size_t>(comps), 0);
    std::vector<char> has_edge(static_cast<std::size_t>(comps), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) euler[label[v]] += 1;
    for (const Edge &e : g.edges()) {
        euler[label[e.u]] -= 1;
        has_edge[label[e.u]] = 1;
    }
    for (const Face &f : all) euler[label[f.boundary[0]]] += 1;
    for (int c = 0; c < comps; ++c)
        if (has_edge[c] && euler[c] != 2) throw InvalidRotation("rotation system is not a planar embedding");

    std::vector<int> cyclic;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].is_cycle) cyclic.push_back(static_cast<int>(i));
    ConflictGraph conflicts(static_cast<int>(cyclic.size()));
    for (std::size_t a = 0; a < cyclic.size(); ++a)
        for (std::size_t b = a + 1; b < cyclic.size(); ++b) {
            const VertexSet &x = all[cyclic[a]].boundary, &y = all[cyclic[b]].boundary;
            bool meet = std::any_of(x.begin(), x.end(), [&](int v) { return y.contains(v); });
            if (meet) conflicts.add_conflict(static_cast<int>(a), static_cast<int>(b));
        }
    FacePacking out;
    for (int i : maximum_independent_set(conflicts, deadline)) {
        out.face_indices.push_back(cyclic[static_cast<std::size_t>(i)]);
        out.faces.push_back(all[cyclic[static_cast<std::size_t>(i)]]);
    }
    out.size = static_cast<int>(out.faces.size());
    std::vector<Cycle> as_cycles;
    for (const Face &f : out.faces) as_cycles.push_back(f.edges());
    if (!is_cycle_packing(g, as_cycles)) throw std::logic_error("fp_fixed_embedding produced overlapping faces");
    return out;
}

}  // namespace jones
