#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "jones/reduction.hpp"

namespace jones {

namespace {

// Exact values per part, computed once.
class Values {
public:
    Values(const Decomposition &d, const SolverLimits &limits) : d_(d), limits_(limits) {}

    const FeedbackSet &fvs(const std::string &name) {
        auto it = fvs_.find(name);
        if (it == fvs_.end()) it = fvs_.emplace(name, fvs_exact(graph(name), limits_)).first;
        return it->second;
    }
    const CyclePacking &cp(const std::string &name) {
        auto it = cp_.find(name);
        if (it == cp_.end()) it = cp_.emplace(name, cp_exact(graph(name), limits_)).first;
        return it->second;
    }
    int f(const std::string &name) { return fvs(name).size; }
    int c(const std::string &name) { return cp(name).size; }

private:
    const Multigraph &graph(const std::string &name) { return name == "G" ? d_.parent : d_.part(name).graph; }

    const Decomposition &d_;
    const SolverLimits &limits_;
    std::map<std::string, FeedbackSet> fvs_;
    std::map<std::string, CyclePacking> cp_;
};

Inequality le(std::string label, std::string detail, int l, int r) {
    return {std::move(label), std::move(detail), l, "<=", r, l <= r};
}
Inequality ge(std::string label, std::string detail, int l, int r) {
    return {std::move(label), std::move(detail), l, ">=", r, l >= r};
}
Inequality eq(std::string label, std::string detail, int l, int r) {
    return {std::move(label), std::move(detail), l, "=", r, l == r};
}
Inequality implies(std::string label, std::string detail, bool premise, bool conclusion) {
    return {std::move(label), std::move(detail), premise ? 1 : 0, "implies", conclusion ? 1 : 0, !premise || conclusion};
}

std::string sn(int i) { return "G" + std::to_string(i); }

// Runs a lift and reports whether it succeeded within its size bound.
template <class F>
bool lift_ok(F &&f, int bound) {
    try {
        return f().size <= bound;
    } catch (const std::logic_error &) {
        return false;
    }
}

FeedbackSet union_fvs(const Decomposition &d, const std::vector<std::pair<const Part *, const FeedbackSet *>> &pieces,
                      std::optional<Vertex> extra = std::nullopt) {
    std::vector<int> all;
    for (auto [p, s] : pieces)
        for (Vertex v : s->vertices) all.push_back(p->map.vertex_to_parent.at(static_cast<std::size_t>(v)));
    if (extra) all.push_back(*extra);
    FeedbackSet out;
    out.vertices = VertexSet(std::move(all));
    out.size = static_cast<int>(out.vertices.size());
    if (!is_feedback_set(d.parent, out.vertices)) throw std::logic_error("union is not a feedback vertex set");
    return out;
}

bool union_packing_ok(const Decomposition &d, const std::vector<std::pair<const Part *, const CyclePacking *>> &pieces) {
    std::vector<Cycle> all;
    for (auto [p, pk] : pieces)
        for (const Cycle &c : pk->cycles) {
            std::vector<EdgeId> edges;
            for (EdgeId e : c) edges.push_back(p->map.edge_to_parent.at(static_cast<std::size_t>(e)));
            all.push_back(arrange_cycle(d.parent, std::move(edges)));
        }
    return is_cycle_packing(d.parent, all);
}

bool uses_edge(const CyclePacking &p, EdgeId e) {
    for (const Cycle &c : p.cycles)
        if (std::find(c.begin(), c.end(), e) != c.end()) return true;
    return false;
}

}  // namespace

bool Certificate::holds() const {
    return lifts_verified && std::all_of(items.begin(), items.end(), [](const Inequality &i) { return i.holds; });
}

Certificate check_bridge_certificate(const Decomposition &d, const SolverLimits &limits) {
    if (d.kind != DecompositionKind::bridge) throw std::invalid_argument("check_bridge_certificate: wrong kind");
    Values v(d, limits);
    Certificate c;
    c.kind = d.kind;
    c.items.push_back(le("fvs-sum", "fvs(G) <= fvs(G1) + fvs(G2)", v.f("G"), v.f("G1") + v.f("G2")));
    c.items.push_back(ge("cp-sum", "cp(G) >= cp(G1) + cp(G2)", v.c("G"), v.c("G1") + v.c("G2")));
    const Part &g1 = d.part("G1"), &g2 = d.part("G2");
    c.lifts_verified = lift_ok([&] { return union_fvs(d, {{&g1, &v.fvs("G1")}, {&g2, &v.fvs("G2")}}); },
                               v.f("G1") + v.f("G2")) &&
                       union_packing_ok(d, {{&g1, &v.cp("G1")}, {&g2, &v.cp("G2")}});
    return c;
}

Certificate check_cut2_certificate(const Decomposition &d, const SolverLimits &limits) {
    if (d.kind != DecompositionKind::cut2) throw std::invalid_argument("check_cut2_certificate: wrong kind");
    Values v(d, limits);
    Certificate c;
    c.kind = d.kind;
    for (int i = 1; i <= 2; ++i) {
        std::string gi = sn(i), gv = gi + "'";
        c.items.push_back(le("cp" + std::to_string(i) + "-lower", "cp(" + gi + ") <= cp(" + gv + ")", v.c(gi), v.c(gv)));
        c.items.push_back(
            le("cp" + std::to_string(i) + "-upper", "cp(" + gv + ") <= cp(" + gi + ") + 1", v.c(gv), v.c(gi) + 1));
    }
    c.items.push_back(le("fvs-virtual1", "fvs(G) <= fvs(G1') + fvs(G2)", v.f("G"), v.f("G1'") + v.f("G2")));
    c.items.push_back(le("fvs-virtual2", "fvs(G) <= fvs(G1) + fvs(G2')", v.f("G"), v.f("G1") + v.f("G2'")));
    c.items.push_back(le("fvs-plus1", "fvs(G) <= fvs(G1) + fvs(G2) + 1", v.f("G"), v.f("G1") + v.f("G2") + 1));

    const Part &g1 = d.part("G1"), &g2 = d.part("G2");
    bool ok = lift_ok([&] { return lift_fvs_2cut(d, 1, v.fvs("G1'"), v.fvs("G2")); }, v.f("G1'") + v.f("G2"));
    ok = ok && lift_ok([&] { return lift_fvs_2cut(d, 2, v.fvs("G2'"), v.fvs("G1")); }, v.f("G2'") + v.f("G1"));
    ok = ok && lift_ok([&] { return union_fvs(d, {{&g1, &v.fvs("G1")}, {&g2, &v.fvs("G2")}}, d.boundary[0].end1); },
                       v.f("G1") + v.f("G2") + 1);
    try {
        const CyclePacking &p1 = v.cp("G1'"), &p2 = v.cp("G2'");
        CyclePacking merged = combine_packings_2cut(d, p1, p2);
        bool u1 = uses_edge(p1, d.part("G1'").virtual_edges[0]), u2 = uses_edge(p2, d.part("G2'").virtual_edges[0]);
        int expected = u1 && u2 ? p1.size + p2.size - 1 : p1.size + p2.size - u1 - u2;
        ok = ok && merged.size == expected;
    } catch (const std::logic_error &) {
        ok = false;
    }
    c.lifts_verified = ok;
    return c;
}

Certificate check_cut3_certificate(const Decomposition &d, const SolverLimits &limits) {
    if (d.kind != DecompositionKind::cut3) throw std::invalid_argument("check_cut3_certificate: wrong kind");
    Values v(d, limits);
    Certificate c;
    c.kind = d.kind;
    const int fG = v.f("G"), cG = v.c("G");
    const int f1 = v.f("G1"), f2 = v.f("G2"), c1 = v.c("G1"), c2 = v.c("G2");
    const std::string labels = "ABC";
    bool ok = true;

    c.items.push_back(ge("a", "cp(G) >= cp(G1) + cp(G2)", cG, c1 + c2));
    for (int i = 1; i <= 2; ++i) {
        std::string abc = sn(i) + "^ABC", other = sn(3 - i);
        c.items.push_back(le("b", "fvs(G) <= fvs(" + abc + ") + fvs(" + other + ")", fG, v.f(abc) + v.f(other)));
        ok = ok && lift_ok([&] { return lift_fvs_3cut(d, i, v.fvs(abc), v.fvs(other)); }, v.f(abc) + v.f(other));
    }
    c.items.push_back(le("c", "fvs(G) <= fvs(G1) + fvs(G2) + 1", fG, f1 + f2 + 1));

    for (int i = 1; i <= 2; ++i) {
        for (char x : labels) {
            std::string pair = pair_part_name(i, x);
            int worst = 0;
            for (char y : labels)
                if (y != x) worst = std::max(worst, v.f(pair_part_name(3 - i, y)));
            c.items.push_back(le("d",
                                 "fvs(G) <= fvs(" + pair + ") + max_{y != " + std::string(1, x) + "} fvs(" + sn(3 - i) +
                                     "^(ABC-y))",
                                 fG, v.f(pair) + worst));
            const FeedbackSet &s = v.fvs(pair);
            char y = partner_label(d, i, x, s.vertices);
            const FeedbackSet &t = v.fvs(pair_part_name(3 - i, y));
            ok = ok && lift_ok([&] { return lift_fvs_3cut_pair(d, i, x, s, t); }, v.f(pair) + worst);
        }
    }

    for (char x : labels) {
        std::string p1 = pair_part_name(1, x), p2 = pair_part_name(2, x);
        bool premise = v.c(p1) == c1 + 1 && v.c(p2) == c2 + 1;
        c.items.push_back(implies("e",
                                  "cp(" + p1 + ") = cp(G1) + 1 and cp(" + p2 + ") = cp(G2) + 1 implies cp(G) >= cp(G1) + "
                                  "cp(G2) + 1",
                                  premise, cG >= c1 + c2 + 1));
        if (premise) {
            // Every maximum packing of either pair part uses its virtual edge.
            const Part &a = d.part(p1), &b = d.part(p2);
            std::vector<const BoundaryEdge *> ends;
            for (const BoundaryEdge &be : d.boundary)
                if (be.label != x) ends.push_back(&be);
            std::vector<Cycle> all;
            std::optional<Cycle> va, vb;
            for (auto [part, pk, slot] : {std::tuple{&a, &v.cp(p1), &va}, std::tuple{&b, &v.cp(p2), &vb}}) {
                for (const Cycle &cy : pk->cycles) {
                    if (std::find(cy.begin(), cy.end(), part->virtual_edges[0]) != cy.end()) {
                        *slot = cy;
                        continue;
                    }
                    std::vector<EdgeId> edges;
                    for (EdgeId e : cy) edges.push_back(part->map.edge_to_parent[e]);
                    all.push_back(arrange_cycle(d.parent, std::move(edges)));
                }
            }
            try {
                ok = ok && va && vb;
                if (va && vb) all.push_back(merge_through_cut(d, a, *va, b, *vb, *ends[0], *ends[1]));
                ok = ok && is_cycle_packing(d.parent, all) && static_cast<int>(all.size()) >= c1 + c2 + 1;
            } catch (const std::logic_error &) {
                ok = false;
            }
        }
    }

    for (int i = 1; i <= 2; ++i) {
        std::string gi = sn(i);
        for (char x : labels) {
            std::string pair = pair_part_name(i, x);
            c.items.push_back(le("f", "cp(" + gi + ") <= cp(" + pair + ")", v.c(gi), v.c(pair)));
            c.items.push_back(le("f", "cp(" + pair + ") <= cp(" + gi + ") + 1", v.c(pair), v.c(gi) + 1));
        }
    }

    for (int i = 1; i <= 2; ++i) {
        std::string gi = sn(i);
        c.informational.push_back(eq("eq1", "fvs(" + gi + "^ABC) = fvs(" + gi + ") + 1", v.f(gi + "^ABC"), v.f(gi) + 1));
    }
    for (int i = 1; i <= 2; ++i) {
        std::string gi = sn(i);
        c.informational.push_back(eq("eq2", "fvs(" + gi + ") = 2 cp(" + gi + ")", v.f(gi), 2 * v.c(gi)));
    }
    c.informational.push_back(eq("eq3", "fvs(G) = fvs(G1) + fvs(G2) + 1", fG, f1 + f2 + 1));
    c.informational.push_back(eq("eq4", "cp(G) = cp(G1) + cp(G2)", cG, c1 + c2));
    c.lifts_verified = ok;
    return c;
}

Certificate check_certificate(const Decomposition &d, const SolverLimits &limits) {
    switch (d.kind) {
    case DecompositionKind::bridge: return check_bridge_certificate(d, limits);
    case DecompositionKind::cut2: return check_cut2_certificate(d, limits);
    case DecompositionKind::cut3: return check_cut3_certificate(d, limits);
    case DecompositionKind::low_degree: {
        Values v(d, limits);
        Certificate c;
        c.kind = d.kind;
        c.items.push_back(eq("fvs-equal", "fvs(G) = fvs(G')", v.f("G"), v.f("G'")));
        c.items.push_back(eq("cp-equal", "cp(G) = cp(G')", v.c("G"), v.c("G'")));
        const Part &p = d.part("G'");
        std::vector<Cycle> lifted;
        for (const Cycle &cy : v.cp("G'").cycles) {
            std::vector<EdgeId> edges;
            for (EdgeId e : cy) edges.insert(edges.end(), p.edge_paths[e].begin(), p.edge_paths[e].end());
            lifted.push_back(arrange_cycle(d.parent, std::move(edges)));
        }
        c.lifts_verified = is_cycle_packing(d.parent, lifted) &&
                           lift_ok([&] { return union_fvs(d, {{&p, &v.fvs("G'")}}); }, v.f("G'"));
        return c;
    }
    case DecompositionKind::components: {
        Values v(d, limits);
        Certificate c;
        c.kind = d.kind;
        int fs = 0, cs = 0;
        std::vector<std::pair<const Part *, const FeedbackSet *>> fsets;
        std::vector<std::pair<const Part *, const CyclePacking *>> packs;
        for (const Part &p : d.parts) {
            fs += v.f(p.name);
            cs += v.c(p.name);
            fsets.push_back({&p, &v.fvs(p.name)});
            packs.push_back({&p, &v.cp(p.name)});
        }
        c.items.push_back(eq("fvs-sum", "fvs(G) = sum of fvs over components", v.f("G"), fs));
        c.items.push_back(eq("cp-sum", "cp(G) = sum of cp over components", v.c("G"), cs));
        c.lifts_verified = lift_ok([&] { return union_fvs(d, fsets); }, fs) && union_packing_ok(d, packs);
        return c;
    }
    }
    throw std::invalid_argument("unknown decomposition kind");
}

}  // namespace jones
