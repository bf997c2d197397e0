#include "jones/reduction.hpp"

namespace jones {

std::string_view leaf_class_name(LeafClass c) {
    switch (c) {
    case LeafClass::acyclic: return "acyclic";
    case LeafClass::essentially_4ec: return "essentially_4ec";
    case LeafClass::small: return "small";
    case LeafClass::unresolved: return "unresolved";
    }
    return "?";
}

int PipelineResult::decomposition_count() const {
    int k = 0;
    for (const PipelineNode &n : nodes) k += n.kind.has_value();
    return k;
}

std::vector<const PipelineNode *> PipelineResult::leaves() const {
    std::vector<const PipelineNode *> out;
    for (const PipelineNode &n : nodes)
        if (n.leaf) out.push_back(&n);
    return out;
}

namespace {

std::optional<Decomposition> next_step(const Multigraph &g) {
    if (auto d = reduce_low_degree(g)) return d;
    if (is_essentially_4ec(g)) return std::nullopt;
    if (!is_connected(g)) return split_components(g);
    auto bridges = enumerate_cuts(g, 1);
    if (!bridges.empty()) return split_bridge(g, bridges.front().edges[0]);
    auto twos = enumerate_cuts(g, 2);
    if (!twos.empty()) return split_2cut(g, twos.front());
    for (const EdgeCut &c : enumerate_cuts(g, 3))
        if (!c.trivial) return decompose_3cut(g, c);
    return std::nullopt;
}

// Parts handed on to the next round; the rest exist only for certificates.
std::vector<const Part *> children_of(const Decomposition &d) {
    std::vector<const Part *> out;
    for (const Part &p : d.parts) {
        bool recurse = false;
        switch (d.kind) {
        case DecompositionKind::low_degree:
        case DecompositionKind::components:
        case DecompositionKind::bridge: recurse = true; break;
        case DecompositionKind::cut2: recurse = p.name == "G1'" || p.name == "G2'"; break;
        case DecompositionKind::cut3: recurse = p.name == "G1" || p.name == "G2"; break;
        }
        if (recurse) out.push_back(&p);
    }
    return out;
}

}  // namespace

PipelineResult reduce_pipeline(const Multigraph &g, const SolverLimits &limits) {
    PipelineResult r;
    r.nodes.push_back({0, -1, g, std::nullopt, {}, std::nullopt, std::nullopt});
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        limits.deadline.check();
        Multigraph cur = r.nodes[i].graph;
        if (is_forest(cur)) {
            r.nodes[i].leaf = LeafClass::acyclic;
            continue;
        }
        std::optional<Decomposition> d = next_step(cur);
        if (!d) {
            if (is_essentially_4ec(cur)) r.nodes[i].leaf = LeafClass::essentially_4ec;
            else if (cur.vertex_count() <= 4) r.nodes[i].leaf = LeafClass::small;
            else r.nodes[i].leaf = LeafClass::unresolved;
            continue;
        }
        Certificate cert = check_certificate(*d, limits);
        r.witnesses_verified = r.witnesses_verified && cert.lifts_verified;
        r.nodes[i].kind = d->kind;
        r.nodes[i].certificate = std::move(cert);
        for (const Part *p : children_of(*d)) {
            int id = static_cast<int>(r.nodes.size());
            r.nodes[i].children.push_back(id);
            r.nodes.push_back({id, static_cast<int>(i), p->graph, std::nullopt, {}, std::nullopt, std::nullopt});
        }
    }
    return r;
}

}  // namespace jones
