#include <algorithm>
#include <atomic>
#include <thread>

#include "jones/canonical.hpp"
#include "jones/harness.hpp"
#include "jones/limits.hpp"
#include "jones/solvers.hpp"
#include "jones/structure.hpp"

namespace jones {

std::string_view outcome_name(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::reported: return "reported";
    case Outcome::skipped: return "skipped";
    }
    return "?";
}

bool VerificationRecord::failed() const {
    for (const auto &[name, outcome] : checks)
        if (name != "facepack" && outcome == Outcome::fail) return true;
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool wanted(const CheckConfig &c, const std::string &name) { return c.checks.empty() || c.checks.contains(name); }

}  // namespace

VerificationRecord run_checks(const Multigraph &g, const CheckConfig &config, std::size_t index) {
    VerificationRecord r;
    r.index = index;
    r.graph_id = canonical_form(g).digest();
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.flags.planar = is_planar(g);
    r.flags.subcubic = is_subcubic(g);
    r.flags.cubic = is_cubic(g);
    r.flags.simple = g.is_simple();
    r.flags.cyclically_4ec = is_cyclically_4ec(g);
    r.flags.three_connected = r.n >= 4 && vertex_connectivity(g) >= 3;

    const bool jones2 = wanted(config, "jones2") && r.flags.planar && r.flags.subcubic;
    const bool triple = wanted(config, "triple") && r.flags.planar;
    const bool munaro = wanted(config, "munaro") && r.flags.simple && r.flags.subcubic && r.flags.planar &&
                        r.flags.cyclically_4ec;
    const bool facepack = wanted(config, "facepack") && r.flags.planar;
    if (!(jones2 || triple || munaro || facepack)) return r;

    SolverLimits limits;
    limits.deadline = Deadline::after(config.time_limit);
    try {
        limits.deadline.check();
        auto t0 = Clock::now();
        r.fvs = fvs_exact(g, limits).size;
        r.wall_ms["fvs"] = ms_since(t0);
        t0 = Clock::now();
        r.cp = cp_exact(g, limits).size;
        r.wall_ms["cp"] = ms_since(t0);
        if (facepack) {
            t0 = Clock::now();
            r.fp_fixed = fp_fixed_embedding(g, planar_embedding(g), limits.deadline).size;
            r.wall_ms["fp"] = ms_since(t0);
            r.fp_exact = r.flags.simple && r.flags.three_connected;
        }
    } catch (const LimitExceeded &e) {
        r.skipped = true;
        r.note = e.what();
        const std::pair<const char *, bool> applicable[] = {
            {"jones2", jones2}, {"triple", triple}, {"munaro", munaro}, {"facepack", facepack}};
        for (auto [name, on] : applicable)
            if (on) r.checks[name] = Outcome::skipped;
        return r;
    }

    const int fvs = *r.fvs, cp = *r.cp;
    if (jones2) r.checks["jones2"] = fvs <= 2 * cp ? Outcome::pass : Outcome::fail;
    if (triple) r.checks["triple"] = fvs <= 3 * cp ? Outcome::pass : Outcome::fail;
    if (munaro) r.checks["munaro"] = fvs <= 2 * cp ? Outcome::pass : Outcome::fail;
    if (facepack) {
        if (fvs <= 2 * *r.fp_fixed) {
            r.checks["facepack"] = Outcome::pass;
        } else {
            // only a unique embedding makes this a counterexample
            r.checks["facepack"] = Outcome::reported;
            r.conjecture_violation = r.fp_exact;
        }
    }
    return r;
}

std::vector<VerificationRecord> run_batch(const std::vector<Multigraph> &graphs, const CheckConfig &config, int jobs) {
    std::vector<VerificationRecord> out(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) out[i] = run_checks(graphs[i], config, i);
    };
    jobs = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    return out;
}

Summary summarize(const std::vector<VerificationRecord> &records) {
    Summary s;
    s.graphs = records.size();
    for (const VerificationRecord &r : records) {
        s.failures += r.failed();
        s.skipped += r.skipped;
        s.conjecture_violations += r.conjecture_violation;
        for (const auto &[name, outcome] : r.checks) ++s.per_check[name][std::string(outcome_name(outcome))];
        if (r.fp_exact && r.fp_fixed && r.fvs) {
            int gap = 2 * *r.fp_fixed - *r.fvs;
            s.min_facepack_gap = s.min_facepack_gap ? std::min(*s.min_facepack_gap, gap) : gap;
        }
    }
    return s;
}

}  // namespace jones
