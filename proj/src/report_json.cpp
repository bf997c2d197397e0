#include "jones/report.hpp"

#include "jones/graph_io.hpp"

namespace jones {

namespace {

Json cycles_json(const std::vector<Cycle> &cycles) {
    Json out = Json::array();
    for (const Cycle &c : cycles) out.push_back(c);
    return out;
}

Json inequality_json(const Inequality &q) {
    return {{"label", q.label}, {"detail", q.detail}, {"left", q.left},
            {"relation", q.relation}, {"right", q.right}, {"holds", q.holds}};
}

Json fold_labels(const std::vector<Inequality> &items) {
    Json out = Json::object();
    for (const Inequality &q : items) {
        if (!out.contains(q.label)) out[q.label] = true;
        out[q.label] = out[q.label].get<bool>() && q.holds;
    }
    return out;
}

}  // namespace

Json witness_json(const FeedbackSet &s) {
    return {{"kind", "fvs"}, {"size", s.size}, {"vertices", s.vertices.items()}, {"cycles", Json::array()}};
}

Json witness_json(const CyclePacking &p) {
    return {{"kind", "cp"}, {"size", p.size}, {"vertices", Json::array()}, {"cycles", cycles_json(p.cycles)}};
}

Json witness_json(const FacePacking &p) {
    std::vector<Cycle> cycles;
    for (const Face &f : p.faces) cycles.push_back(f.edges());
    return {{"kind", "fp"}, {"size", p.size}, {"vertices", Json::array()}, {"cycles", cycles_json(cycles)}};
}

Json certificate_json(const Certificate &c) {
    Json items = Json::array(), info = Json::array();
    for (const Inequality &q : c.items) items.push_back(inequality_json(q));
    for (const Inequality &q : c.informational) info.push_back(inequality_json(q));
    return {{"kind", kind_name(c.kind)},           {"holds", c.holds()},
            {"lifts_verified", c.lifts_verified},  {"labels", fold_labels(c.items)},
            {"items", items},                      {"informational", fold_labels(c.informational)},
            {"informational_items", info}};
}

Json cut_json(const EdgeCut &c) {
    return {{"edges", c.edges.items()},
            {"side_a", c.side_a.items()},
            {"side_b", c.side_b.items()},
            {"trivial", c.trivial},
            {"cyclic", c.cyclic}};
}

Json pipeline_json(const Multigraph &g, const PipelineResult &r) {
    Json nodes = Json::array();
    for (const PipelineNode &node : r.nodes) {
        Json j = {{"id", node.id},
                  {"parent", node.parent},
                  {"n", node.graph.vertex_count()},
                  {"m", node.graph.edge_count()},
                  {"graph", serialize(node.graph, GraphFormat::sparse6)}};
        if (node.kind) {
            j["kind"] = kind_name(*node.kind);
            j["children"] = node.children;
        }
        if (node.certificate) j["certificate"] = certificate_json(*node.certificate);
        if (node.leaf) j["leaf"] = leaf_class_name(*node.leaf);
        nodes.push_back(std::move(j));
    }
    return {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"decompositions", r.decomposition_count()},
            {"leaves", r.leaves().size()},
            {"witnesses_verified", r.witnesses_verified},
            {"nodes", nodes}};
}

Json record_to_json(const VerificationRecord &r, bool with_timings) {
    std::string status = r.failed()                 ? "failure"
                         : r.conjecture_violation   ? "CONJECTURE-VIOLATION"
                         : r.skipped                ? "skipped"
                                                    : "ok";
    Json values = Json::object();
    if (r.cp) values["cp"] = *r.cp;
    if (r.fvs) values["fvs"] = *r.fvs;
    if (r.fp_fixed) {
        values["fp_fixed"] = *r.fp_fixed;
        values["fp_kind"] = r.fp_exact ? "exact" : "lower_bound";
    }
    Json checks = Json::object();
    for (const auto &[name, outcome] : r.checks) checks[name] = outcome_name(outcome);
    Json j = {{"index", r.index},
              {"graph_id", r.graph_id},
              {"n", r.n},
              {"m", r.m},
              {"flags",
               {{"planar", r.flags.planar},
                {"subcubic", r.flags.subcubic},
                {"cubic", r.flags.cubic},
                {"simple", r.flags.simple},
                {"cyclically_4ec", r.flags.cyclically_4ec},
                {"three_connected", r.flags.three_connected}}},
              {"values", values},
              {"checks", checks},
              {"status", status}};
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timings) {
        Json t = Json::object();
        for (const auto &[k, v] : r.wall_ms) t[k] = v;
        j["wall_ms"] = t;
    }
    return j;
}

Json summary_to_json(const Summary &s) {
    Json checks = Json::object();
    for (const auto &[name, counts] : s.per_check) {
        Json c = Json::object();
        for (const auto &[k, v] : counts) c[k] = v;
        checks[name] = c;
    }
    Json j = {{"summary", true},
              {"graphs", s.graphs},
              {"failures", s.failures},
              {"skipped", s.skipped},
              {"conjecture_violations", s.conjecture_violations},
              {"checks", checks}};
    j["min_2fp_minus_fvs"] = s.min_facepack_gap ? Json(*s.min_facepack_gap) : Json(nullptr);
    return j;
}

std::string record_json(const VerificationRecord &r, bool with_timings) {
    return record_to_json(r, with_timings).dump();
}

std::string summary_json(const Summary &s) { return summary_to_json(s).dump(); }

}  // namespace jones
