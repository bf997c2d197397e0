#include "jones/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace jones {

namespace {

std::vector<EdgeId> inverse(const std::vector<int> &to_parent, int parent_size) {
    std::vector<int> out(static_cast<std::size_t>(parent_size), kNone);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        if (to_parent[i] != kNone) out[to_parent[i]] = static_cast<int>(i);
    return out;
}

Vertex child_vertex(const Part &p, Vertex parent_v) {
    const auto &m = p.map.vertex_to_parent;
    auto it = std::find(m.begin(), m.end(), parent_v);
    if (it == m.end()) throw std::logic_error("vertex not present in part " + p.name);
    return static_cast<Vertex>(it - m.begin());
}

Part plain_part(std::string name, const Multigraph &g, const VertexSet &keep) {
    Edited e = induced_subgraph(g, keep);
    return {std::move(name), std::move(e.graph), std::move(e.map), {}, {}, {}};
}

Part with_virtual(std::string name, const Part &base, Vertex a, Vertex b, std::string tag) {
    Part p = base;
    p.name = std::move(name);
    p.virtual_edges.push_back(p.graph.edge_count());
    p.graph = add_edge(p.graph, child_vertex(base, a), child_vertex(base, b));
    p.map.edge_to_parent.push_back(kNone);
    p.virtual_tags.push_back(std::move(tag));
    return p;
}

VertexSet complement(int n, const VertexSet &s) {
    std::vector<int> out;
    for (Vertex v = 0; v < n; ++v)
        if (!s.contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

// Boundary entries in cut-edge order; end1 is the endpoint outside side_b.
std::vector<BoundaryEdge> boundary_of(const Multigraph &g, const EdgeCut &cut) {
    std::vector<BoundaryEdge> out;
    char label = 'A';
    for (EdgeId e : cut.edges) {
        const Edge &ed = g.edge(e);
        BoundaryEdge b{label++, e, ed.u, ed.v};
        if (cut.side_b.contains(b.end1)) std::swap(b.end1, b.end2);
        out.push_back(b);
    }
    return out;
}

EdgeCut checked_cut(const Multigraph &g, const EdgeCut &cut, std::size_t size, const char *what) {
    if (cut.edges.size() != size) throw std::invalid_argument(std::string(what) + ": wrong cut size");
    auto c = as_minimal_cut(g, cut.edges);
    if (!c) throw std::invalid_argument(std::string(what) + ": not a minimal edge cut");
    return *c;
}

const BoundaryEdge &boundary_edge(const Decomposition &d, char label) {
    for (const BoundaryEdge &b : d.boundary)
        if (b.label == label) return b;
    throw std::invalid_argument(std::string("no boundary edge labelled ") + label);
}

Vertex end_on(const BoundaryEdge &b, int side) { return side == 1 ? b.end1 : b.end2; }

void check_side(int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
}

std::string side_name(int side) { return "G" + std::to_string(side); }

VertexSet to_parent(const Part &p, const VertexSet &s) {
    std::vector<int> out;
    for (Vertex v : s) {
        Vertex pv = p.map.vertex_to_parent.at(static_cast<std::size_t>(v));
        if (pv != kNone) out.push_back(pv);
    }
    return VertexSet(std::move(out));
}

VertexSet unite(const VertexSet &a, const VertexSet &b) {
    std::vector<int> out(a.items());
    out.insert(out.end(), b.begin(), b.end());
    return VertexSet(std::move(out));
}

void require_fvs(const Part &p, const FeedbackSet &s) {
    if (!is_feedback_set(p.graph, s.vertices))
        throw std::invalid_argument("not a feedback vertex set of " + p.name);
}

FeedbackSet finish(const Multigraph &parent, VertexSet s, const char *what) {
    if (!is_feedback_set(parent, s)) throw std::logic_error(std::string(what) + ": lifted set leaves a cycle");
    FeedbackSet out;
    out.size = static_cast<int>(s.size());
    out.vertices = std::move(s);
    return out;
}

// Unique tree path, or empty when a and b lie in different trees.
std::vector<Vertex> forest_path(const Multigraph &t, Vertex a, Vertex b) {
    std::vector<Vertex> prev(static_cast<std::size_t>(t.vertex_count()), kNone);
    std::vector<char> seen(static_cast<std::size_t>(t.vertex_count()), 0);
    std::queue<Vertex> q;
    q.push(a);
    seen[a] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (EdgeId e : t.incident(v)) {
            Vertex w = t.edge(e).other(v);
            if (seen[w]) continue;
            seen[w] = 1;
            prev[w] = v;
            q.push(w);
        }
    }
    if (!seen[b]) return {};
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Cycles of a packing, split by whether they use the part's virtual edge.
struct SplitPacking {
    std::vector<Cycle> plain;
    std::optional<Cycle> through_virtual;
};

SplitPacking split_packing(const Part &p, const CyclePacking &pk) {
    if (!is_cycle_packing(p.graph, pk.cycles)) throw std::invalid_argument("invalid cycle packing for " + p.name);
    SplitPacking out;
    for (const Cycle &c : pk.cycles) {
        bool virt = std::any_of(c.begin(), c.end(), [&](EdgeId e) {
            return std::find(p.virtual_edges.begin(), p.virtual_edges.end(), e) != p.virtual_edges.end();
        });
        if (virt) out.through_virtual = c;
        else out.plain.push_back(c);
    }
    return out;
}

Cycle mapped_cycle(const Multigraph &parent, const Part &p, const Cycle &c) {
    std::vector<EdgeId> edges;
    for (EdgeId e : c) edges.push_back(p.map.edge_to_parent.at(static_cast<std::size_t>(e)));
    return arrange_cycle(parent, std::move(edges));
}

}  // namespace

Cycle merge_through_cut(const Decomposition &d, const Part &a, const Cycle &ca, const Part &b, const Cycle &cb,
                        const BoundaryEdge &e, const BoundaryEdge &f) {
    std::vector<EdgeId> edges{e.edge, f.edge};
    for (EdgeId x : ca)
        if (a.map.edge_to_parent.at(static_cast<std::size_t>(x)) != kNone) edges.push_back(a.map.edge_to_parent[x]);
    for (EdgeId x : cb)
        if (b.map.edge_to_parent.at(static_cast<std::size_t>(x)) != kNone) edges.push_back(b.map.edge_to_parent[x]);
    Cycle out = arrange_cycle(d.parent, std::move(edges));
    if (out.empty()) throw std::logic_error("merged edges do not form a cycle");
    return out;
}

// ---- low-degree reductions ----------------------------------------------

Suppression suppress_degree2(const Multigraph &g, Vertex v) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex index out of range: " + std::to_string(v));
    if (g.degree(v) != 2) throw std::invalid_argument("suppress_degree2: vertex does not have degree 2");
    if (g.loop_count(v) > 0) throw std::invalid_argument("suppress_degree2: vertex carries a loop");
    Suppression s;
    s.v = v;
    s.via_u = g.incident(v)[0];
    s.via_w = g.incident(v)[1];
    s.u = g.edge(s.via_u).other(v);
    s.w = g.edge(s.via_w).other(v);
    Edited d = delete_vertices(g, VertexSet{v});
    s.new_edge = d.graph.edge_count();
    s.graph = add_edge(d.graph, s.u - (s.u > v), s.w - (s.w > v));
    s.map = std::move(d.map);
    s.map.edge_to_parent.push_back(kNone);
    return s;
}

Cycle Suppression::cycle_to_child(const Multigraph &parent, const Cycle &c) const {
    std::vector<EdgeId> idx = inverse(map.edge_to_parent, parent.edge_count());
    std::vector<EdgeId> edges;
    bool through = false;
    for (EdgeId e : c) {
        if (e == via_u || e == via_w) through = true;
        else edges.push_back(idx.at(static_cast<std::size_t>(e)));
    }
    if (through) edges.push_back(new_edge);
    Cycle out = arrange_cycle(graph, std::move(edges));
    if (out.empty()) throw std::invalid_argument("cycle_to_child: input is not a cycle of the parent");
    return out;
}

Cycle Suppression::cycle_to_parent(const Multigraph &parent, const Cycle &c) const {
    std::vector<EdgeId> edges;
    for (EdgeId e : c) {
        if (e == new_edge) {
            edges.push_back(via_u);
            edges.push_back(via_w);
        } else {
            edges.push_back(map.edge_to_parent.at(static_cast<std::size_t>(e)));
        }
    }
    Cycle out = arrange_cycle(parent, std::move(edges));
    if (out.empty()) throw std::invalid_argument("cycle_to_parent: input is not a cycle of the child");
    return out;
}

VertexSet Suppression::fvs_to_parent(const VertexSet &s) const {
    std::vector<int> out;
    for (Vertex x : s) out.push_back(map.vertex_to_parent.at(static_cast<std::size_t>(x)));
    return VertexSet(std::move(out));
}

VertexSet Suppression::fvs_to_child(const VertexSet &s) const {
    std::vector<int> out;
    for (Vertex x : s) {
        Vertex y = x == v ? u : x;
        out.push_back(y - (y > v));
    }
    return VertexSet(std::move(out));
}

Edited delete_degree_le1(const Multigraph &g) {
    Edited cur{g, {}};
    cur.map.vertex_to_parent.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(cur.map.vertex_to_parent.begin(), cur.map.vertex_to_parent.end(), 0);
    cur.map.edge_to_parent.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(cur.map.edge_to_parent.begin(), cur.map.edge_to_parent.end(), 0);
    while (true) {
        std::vector<int> low;
        for (Vertex v = 0; v < cur.graph.vertex_count(); ++v)
            if (cur.graph.degree(v) <= 1) low.push_back(v);
        if (low.empty()) return cur;
        Edited next = delete_vertices(cur.graph, VertexSet(std::move(low)));
        for (auto &v : next.map.vertex_to_parent) v = cur.map.vertex_to_parent[v];
        for (auto &e : next.map.edge_to_parent) e = cur.map.edge_to_parent[e];
        cur = std::move(next);
    }
}

std::string_view kind_name(DecompositionKind k) {
    switch (k) {
    case DecompositionKind::low_degree: return "low_degree";
    case DecompositionKind::components: return "components";
    case DecompositionKind::bridge: return "bridge";
    case DecompositionKind::cut2: return "cut2";
    case DecompositionKind::cut3: return "cut3";
    }
    return "?";
}

const Part &Decomposition::part(std::string_view name) const {
    for (const Part &p : parts)
        if (p.name == name) return p;
    throw std::invalid_argument("no part named " + std::string(name));
}

std::string pair_part_name(int side, char missing) {
    check_side(side);
    std::string labels;
    for (char c : {'A', 'B', 'C'})
        if (c != missing) labels += c;
    if (labels.size() != 2) throw std::invalid_argument("label must be A, B or C");
    return side_name(side) + "^" + labels;
}

// ---- decompositions -----------------------------------------------------

std::optional<Decomposition> reduce_low_degree(const Multigraph &g) {
    Multigraph cur = g;
    std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()));
    std::iota(vmap.begin(), vmap.end(), 0);
    std::vector<std::vector<EdgeId>> paths;
    for (EdgeId e = 0; e < g.edge_count(); ++e) paths.push_back({e});
    bool changed = false;

    while (true) {
        Edited pruned = delete_degree_le1(cur);
        if (pruned.graph.vertex_count() != cur.vertex_count()) {
            changed = true;
            std::vector<Vertex> nv;
            for (Vertex v : pruned.map.vertex_to_parent) nv.push_back(vmap[v]);
            std::vector<std::vector<EdgeId>> np;
            for (EdgeId e : pruned.map.edge_to_parent) np.push_back(paths[e]);
            vmap = std::move(nv);
            paths = std::move(np);
            cur = std::move(pruned.graph);
        }
        Vertex pick = kNone;
        for (Vertex v = 0; v < cur.vertex_count() && pick == kNone; ++v)
            if (cur.degree(v) == 2 && cur.loop_count(v) == 0) pick = v;
        if (pick == kNone) break;
        changed = true;
        Suppression s = suppress_degree2(cur, pick);
        std::vector<Vertex> nv;
        for (Vertex v : s.map.vertex_to_parent) nv.push_back(vmap[v]);
        std::vector<std::vector<EdgeId>> np;
        for (EdgeId e : s.map.edge_to_parent) {
            if (e != kNone) {
                np.push_back(paths[e]);
                continue;
            }
            std::vector<EdgeId> joined = paths[s.via_u];
            joined.insert(joined.end(), paths[s.via_w].begin(), paths[s.via_w].end());
            np.push_back(std::move(joined));
        }
        vmap = std::move(nv);
        paths = std::move(np);
        cur = std::move(s.graph);
    }
    if (!changed) return std::nullopt;

    Decomposition d;
    d.kind = DecompositionKind::low_degree;
    d.parent = g;
    Part p;
    p.name = "G'";
    p.graph = std::move(cur);
    p.map.vertex_to_parent = std::move(vmap);
    for (const auto &path : paths) p.map.edge_to_parent.push_back(path.size() == 1 ? path[0] : kNone);
    p.edge_paths = std::move(paths);
    d.parts.push_back(std::move(p));
    return d;
}

Decomposition split_components(const Multigraph &g) {
    Decomposition d;
    d.kind = DecompositionKind::components;
    d.parent = g;
    int i = 1;
    for (const VertexSet &c : components(g)) d.parts.push_back(plain_part("C" + std::to_string(i++), g, c));
    return d;
}

Decomposition split_bridge(const Multigraph &g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::out_of_range("edge index out of range: " + std::to_string(e));
    auto cut = as_minimal_cut(g, EdgeSet{e});
    if (!cut) throw std::invalid_argument("split_bridge: edge is not a bridge");
    Decomposition d;
    d.kind = DecompositionKind::bridge;
    d.parent = g;
    d.cut = *cut;
    d.boundary = boundary_of(g, d.cut);
    d.parts.push_back(plain_part("G1", g, complement(g.vertex_count(), d.cut.side_b)));
    d.parts.push_back(plain_part("G2", g, d.cut.side_b));
    return d;
}

Decomposition split_2cut(const Multigraph &g, const EdgeCut &cut) {
    Decomposition d;
    d.kind = DecompositionKind::cut2;
    d.parent = g;
    d.cut = checked_cut(g, cut, 2, "split_2cut");
    d.boundary = boundary_of(g, d.cut);
    Part g1 = plain_part("G1", g, complement(g.vertex_count(), d.cut.side_b));
    Part g2 = plain_part("G2", g, d.cut.side_b);
    const BoundaryEdge &a = d.boundary[0], &b = d.boundary[1];
    Part g1v = with_virtual("G1'", g1, a.end1, b.end1, "A+B");
    Part g2v = with_virtual("G2'", g2, a.end2, b.end2, "A+B");
    d.parts = {std::move(g1), std::move(g2), std::move(g1v), std::move(g2v)};
    return d;
}

Decomposition decompose_3cut(const Multigraph &g, const EdgeCut &cut) {
    Decomposition d;
    d.kind = DecompositionKind::cut3;
    d.parent = g;
    d.cut = checked_cut(g, cut, 3, "decompose_3cut");
    if (d.cut.trivial) throw std::invalid_argument("decompose_3cut: cut is trivial");
    d.boundary = boundary_of(g, d.cut);

    VertexSet side1 = complement(g.vertex_count(), d.cut.side_b);
    std::array<Part, 2> base = {plain_part("G1", g, side1), plain_part("G2", g, d.cut.side_b)};
    d.parts.push_back(base[0]);
    d.parts.push_back(base[1]);
    for (int side = 1; side <= 2; ++side) {
        Edited c = contract_side_to_vertex(g, side == 1 ? side1 : d.cut.side_b);
        d.parts.push_back({side_name(side) + "^ABC", std::move(c.graph), std::move(c.map), {}, {}, {}});
        for (char missing : {'C', 'B', 'A'}) {
            std::string name = pair_part_name(side, missing);
            std::vector<const BoundaryEdge *> ends;
            for (const BoundaryEdge &b : d.boundary)
                if (b.label != missing) ends.push_back(&b);
            std::string tag = std::string(1, ends[0]->label) + "+" + ends[1]->label;
            d.parts.push_back(with_virtual(name, base[side - 1], end_on(*ends[0], side), end_on(*ends[1], side), tag));
        }
    }
    return d;
}

// ---- witness lifting ----------------------------------------------------

CyclePacking combine_packings_2cut(const Decomposition &d, const CyclePacking &p1, const CyclePacking &p2) {
    if (d.kind != DecompositionKind::cut2) throw std::invalid_argument("combine_packings_2cut: not a cut2 decomposition");
    const Part &a = d.part("G1'"), &b = d.part("G2'");
    SplitPacking s1 = split_packing(a, p1), s2 = split_packing(b, p2);
    CyclePacking out;
    for (const Cycle &c : s1.plain) out.cycles.push_back(mapped_cycle(d.parent, a, c));
    for (const Cycle &c : s2.plain) out.cycles.push_back(mapped_cycle(d.parent, b, c));
    if (s1.through_virtual && s2.through_virtual) {
        out.cycles.push_back(merge_through_cut(d, a, *s1.through_virtual, b, *s2.through_virtual, d.boundary[0],
                                               d.boundary[1]));
    }
    if (!is_cycle_packing(d.parent, out.cycles)) throw std::logic_error("combine_packings_2cut: result is not a packing");
    out.size = static_cast<int>(out.cycles.size());
    return out;
}

FeedbackSet lift_fvs_2cut(const Decomposition &d, int side_with_virtual, const FeedbackSet &s_virtual,
                          const FeedbackSet &s_plain) {
    if (d.kind != DecompositionKind::cut2) throw std::invalid_argument("lift_fvs_2cut: not a cut2 decomposition");
    check_side(side_with_virtual);
    const Part &pv = d.part(side_name(side_with_virtual) + "'");
    const Part &pp = d.part(side_name(3 - side_with_virtual));
    require_fvs(pv, s_virtual);
    require_fvs(pp, s_plain);
    return finish(d.parent, unite(to_parent(pv, s_virtual.vertices), to_parent(pp, s_plain.vertices)), "lift_fvs_2cut");
}

Vertex tree_median(const Multigraph &t, Vertex u, Vertex v, Vertex w) {
    for (Vertex x : {u, v, w})
        if (!t.has_vertex(x)) throw std::out_of_range("vertex index out of range: " + std::to_string(x));
    if (!is_forest(t)) throw std::invalid_argument("tree_median: graph is not a forest");
    std::vector<Vertex> pv = forest_path(t, u, v), pw = forest_path(t, u, w);
    if (pv.empty() || pw.empty()) throw std::invalid_argument("tree_median: vertices lie in different trees");
    std::size_t i = 0;
    while (i + 1 < pv.size() && i + 1 < pw.size() && pv[i + 1] == pw[i + 1]) ++i;
    return pv[i];
}

FeedbackSet lift_fvs_3cut(const Decomposition &d, int side, const FeedbackSet &s_abc, const FeedbackSet &s_other) {
    if (d.kind != DecompositionKind::cut3) throw std::invalid_argument("lift_fvs_3cut: not a cut3 decomposition");
    check_side(side);
    const Part &abc = d.part(side_name(side) + "^ABC");
    const Part &other = d.part(side_name(3 - side));
    require_fvs(abc, s_abc);
    require_fvs(other, s_other);

    VertexSet s = unite(to_parent(abc, s_abc.vertices), to_parent(other, s_other.vertices));
    const Vertex x = abc.graph.vertex_count() - 1;
    if (s_abc.vertices.contains(x)) {
        // Boundary ends that survive on the other side, grouped by tree.
        Edited forest = delete_vertices(other.graph, s_other.vertices);
        std::vector<Vertex> index = inverse(forest.map.vertex_to_parent, other.graph.vertex_count());
        std::vector<int> label = component_labels(forest.graph);
        std::vector<Vertex> ends;
        for (const BoundaryEdge &b : d.boundary) {
            Vertex fv = index[child_vertex(other, end_on(b, 3 - side))];
            if (fv != kNone) ends.push_back(fv);
        }
        for (std::size_t i = 0; i < ends.size(); ++i) {
            std::vector<Vertex> group;
            for (Vertex e : ends)
                if (label[e] == label[ends[i]]) group.push_back(e);
            if (group.size() < 2 || group[0] != ends[i]) continue;
            Vertex cut;
            if (group.size() == 3) {
                cut = tree_median(forest.graph, group[0], group[1], group[2]);
            } else {
                std::vector<Vertex> path = forest_path(forest.graph, group[0], group[1]);
                cut = *std::min_element(path.begin(), path.end());
            }
            s.insert(other.map.vertex_to_parent[forest.map.vertex_to_parent[cut]]);
            break;
        }
    }
    // The median step can leave a vertex that is no longer needed.
    for (Vertex v : VertexSet(s)) {
        VertexSet smaller = s;
        smaller.erase(v);
        if (is_feedback_set(d.parent, smaller)) s = std::move(smaller);
    }
    return finish(d.parent, std::move(s), "lift_fvs_3cut");
}

char partner_label(const Decomposition &d, int side, char x, const VertexSet &s_pair) {
    if (d.kind != DecompositionKind::cut3) throw std::invalid_argument("partner_label: not a cut3 decomposition");
    check_side(side);
    const Part &pair = d.part(pair_part_name(side, x));
    if (!is_feedback_set(pair.graph, s_pair)) throw std::invalid_argument("not a feedback vertex set of " + pair.name);
    const Part &base = d.part(side_name(side));

    std::vector<char> others;
    for (char c : {'A', 'B', 'C'})
        if (c != x) others.push_back(c);
    Vertex xv = child_vertex(base, end_on(boundary_edge(d, x), side));
    if (s_pair.contains(xv)) return others[0];

    Edited forest = delete_vertices(base.graph, s_pair);
    std::vector<Vertex> index = inverse(forest.map.vertex_to_parent, base.graph.vertex_count());
    std::vector<int> label = component_labels(forest.graph);
    for (std::size_t k = 0; k < 2; ++k) {
        Vertex yv = child_vertex(base, end_on(boundary_edge(d, others[k]), side));
        if (s_pair.contains(yv)) continue;
        // x reaches y here, so the other side must separate them: solve the
        // pair part that joins x and y, i.e. the one missing the third label.
        if (label[index[xv]] == label[index[yv]]) return others[1 - k];
    }
    return others[0];
}

FeedbackSet lift_fvs_3cut_pair(const Decomposition &d, int side, char x, const FeedbackSet &s_pair,
                               const FeedbackSet &s_partner) {
    char y = partner_label(d, side, x, s_pair.vertices);
    const Part &pair = d.part(pair_part_name(side, x));
    const Part &partner = d.part(pair_part_name(3 - side, y));
    require_fvs(partner, s_partner);
    return finish(d.parent, unite(to_parent(pair, s_pair.vertices), to_parent(partner, s_partner.vertices)),
                  "lift_fvs_3cut_pair");
}

}  // namespace jones
