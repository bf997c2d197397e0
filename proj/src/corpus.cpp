#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "jones/canonical.hpp"
#include "jones/harness.hpp"
#include "jones/limits.hpp"
#include "jones/structure.hpp"

namespace jones {

std::optional<CorpusClass> corpus_class_from_name(std::string_view name) {
    if (name == "cubic-planar-simple") return CorpusClass::cubic_planar_simple;
    if (name == "subcubic-planar-simple") return CorpusClass::subcubic_planar_simple;
    if (name == "subcubic-planar-multi") return CorpusClass::subcubic_planar_multi;
    if (name == "file-ingest") return CorpusClass::file_ingest;
    return std::nullopt;
}

std::string_view corpus_class_name(CorpusClass c) {
    switch (c) {
    case CorpusClass::cubic_planar_simple: return "cubic-planar-simple";
    case CorpusClass::subcubic_planar_simple: return "subcubic-planar-simple";
    case CorpusClass::subcubic_planar_multi: return "subcubic-planar-multi";
    case CorpusClass::file_ingest: return "file-ingest";
    }
    return "?";
}

namespace {

using Level = std::vector<std::pair<std::string, Multigraph>>;

Multigraph relabel(const Multigraph &g, const std::vector<Vertex> &labeling) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge &e : g.edges()) {
        Vertex a = labeling[e.u], b = labeling[e.v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge &x, const Edge &y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
    return Multigraph(g.vertex_count(), std::move(edges));
}

// Every child of `g` obtained by adding one vertex joined to at least one
// old vertex, staying subcubic. Connected parents give connected children,
// and every connected graph arises this way from deleting a non-cut vertex.
template <class Emit>
void extensions(const Multigraph &g, bool multigraph, Emit &&emit) {
    const int n = g.vertex_count();
    std::vector<int> room(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) room[v] = 3 - g.degree(v);
    std::vector<Edge> base(g.edges().begin(), g.edges().end());
    std::vector<Vertex> chosen;

    auto finish = [&](bool loop) {
        std::vector<Edge> edges = base;
        for (Vertex t : chosen) edges.push_back({t, n});
        if (loop) edges.push_back({n, n});
        emit(Multigraph(n + 1, std::move(edges)));
    };
    // chosen is a non-decreasing multiset (a set for simple graphs)
    auto rec = [&](auto &self, Vertex from, int budget, bool loop) -> void {
        if (!chosen.empty()) finish(loop);
        if (budget == 0) return;
        for (Vertex t = from; t < n; ++t) {
            if (room[t] == 0) continue;
            --room[t];
            chosen.push_back(t);
            self(self, multigraph ? t : t + 1, budget - 1, loop);
            chosen.pop_back();
            ++room[t];
        }
    };
    rec(rec, 0, 3, false);
    if (multigraph) rec(rec, 0, 1, true);
}

Level next_level(const Level &prev, bool multigraph, const std::function<bool(const Multigraph &, int)> &keep,
                 int jobs, std::size_t cap) {
    jobs = std::max(1, jobs);
    std::vector<std::unordered_map<std::string, Multigraph>> local(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> overflow{false};
    auto worker = [&](int id) {
        auto &seen = local[static_cast<std::size_t>(id)];
        for (std::size_t i; (i = next.fetch_add(1)) < prev.size() && !overflow;) {
            extensions(prev[i].second, multigraph, [&](Multigraph child) {
                CanonicalLabeling cl = canonical_labeling(child);
                if (seen.contains(cl.form.bytes)) return;
                if (keep && !keep(child, child.vertex_count())) return;
                if (!is_planar(child)) return;
                seen.emplace(std::move(cl.form.bytes), relabel(child, cl.labeling));
                if (seen.size() > cap) overflow = true;
            });
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto &t : pool) t.join();
    }
    if (overflow) throw LimitExceeded("corpus level exceeds the resource cap");

    Level out;
    for (auto &m : local)
        for (auto &kv : m) out.emplace_back(kv.first, std::move(kv.second));
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    out.erase(std::unique(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first == b.first; }),
              out.end());
    if (out.size() > cap) throw LimitExceeded("corpus level exceeds the resource cap");
    return out;
}

Level first_level(bool multigraph) {
    Level out;
    Multigraph k1(1);
    out.emplace_back(canonical_form(k1).bytes, k1);
    if (multigraph) {
        Multigraph loop(1, {{0, 0}});
        out.emplace_back(canonical_form(loop).bytes, loop);
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    }
    return out;
}

std::vector<std::vector<Multigraph>> levels_up_to(int max_n, bool multigraph,
                                                  const std::function<bool(const Multigraph &, int)> &keep, int jobs,
                                                  std::size_t cap) {
    std::vector<std::vector<Multigraph>> out;
    if (max_n < 1) return out;
    Level cur = first_level(multigraph);
    for (int n = 1;; ++n) {
        if (keep)
            std::erase_if(cur, [&](const auto &kv) { return !keep(kv.second, n); });
        std::vector<Multigraph> graphs;
        graphs.reserve(cur.size());
        for (const auto &kv : cur) graphs.push_back(kv.second);
        out.push_back(std::move(graphs));
        if (n == max_n) break;
        cur = next_level(cur, multigraph, keep, jobs, cap);
    }
    return out;
}

int deficit(const Multigraph &g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d += 3 - g.degree(v);
    return d;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<Multigraph> connected_subcubic_planar(int n, bool multigraph,
                                                   const std::function<bool(const Multigraph &, int)> &keep, int jobs,
                                                   std::size_t cap) {
    auto levels = levels_up_to(n, multigraph, keep, jobs, cap);
    return levels.empty() ? std::vector<Multigraph>{} : levels.back();
}

std::vector<Multigraph> generate_corpus(const CorpusSpec &spec) {
    std::vector<Multigraph> out;
    const int lo = std::max(1, spec.min_n);
    switch (spec.cls) {
    case CorpusClass::cubic_planar_simple:
    case CorpusClass::subcubic_planar_simple:
    case CorpusClass::subcubic_planar_multi: {
        const bool multi = spec.cls == CorpusClass::subcubic_planar_multi;
        const int limit = multi ? kMaxMultiCorpusN : kMaxSimpleCorpusN;
        if (spec.max_n > limit)
            throw std::invalid_argument("max_n " + std::to_string(spec.max_n) + " exceeds " + std::to_string(limit) +
                                        " for class " + std::string(corpus_class_name(spec.cls)));
        if (spec.cls == CorpusClass::cubic_planar_simple) {
            // Deleting a non-cut vertex raises the deficit by at most 3, so
            // ancestors of a cubic graph on `target` vertices stay within
            // 3 (target - n). Each even size gets its own pruned run.
            for (int target = std::max(lo, 4); target <= spec.max_n; ++target) {
                if (target % 2) continue;
                auto keep = [target](const Multigraph &g, int n) { return deficit(g) <= 3 * (target - n); };
                for (Multigraph &g : connected_subcubic_planar(target, false, keep, spec.jobs, spec.cap))
                    if (is_cubic(g)) out.push_back(std::move(g));
            }
            break;
        }
        auto levels = levels_up_to(spec.max_n, multi, {}, spec.jobs, spec.cap);
        for (int n = lo; n <= spec.max_n; ++n)
            for (Multigraph &g : levels[static_cast<std::size_t>(n - 1)]) out.push_back(std::move(g));
        break;
    }
    case CorpusClass::file_ingest: {
        std::vector<std::pair<std::string, Multigraph>> seen;
        for (Multigraph &g : parse_many(read_file(spec.path), spec.format)) {
            if (spec.max_n > 0 && g.vertex_count() > spec.max_n) continue;
            if (g.vertex_count() < lo) continue;
            seen.emplace_back(canonical_form(g).bytes, std::move(g));
        }
        // keep the first occurrence, in file order
        std::vector<std::size_t> order(seen.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return seen[a].first < seen[b].first; });
        std::vector<bool> drop(seen.size(), false);
        for (std::size_t i = 1; i < order.size(); ++i)
            if (seen[order[i]].first == seen[order[i - 1]].first) drop[order[i]] = true;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!drop[i]) out.push_back(std::move(seen[i].second));
        break;
    }
    }
    if (spec.seed != 0) {
        std::mt19937_64 rng(spec.seed);
        std::shuffle(out.begin(), out.end(), rng);
    }
    return out;
}

}  // namespace jones
