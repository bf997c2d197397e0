#include "jones/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace jones {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Multigraph &g) : n_(g.vertex_count()), matrix_(static_cast<std::size_t>(n_ * n_), 0) {
        for (const Edge &e : g.edges()) {
            auto bump = [&](Vertex a, Vertex b) {
                auto &cell = matrix_[static_cast<std::size_t>(a * n_ + b)];
                if (cell < 255) ++cell;
            };
            bump(e.u, e.v);
            if (!e.is_loop()) bump(e.v, e.u);
        }
        neighbors_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex u = 0; u < n_; ++u)
                if (u != v && at(v, u) != 0) neighbors_[v].push_back(u);
    }

    CanonicalLabeling run() {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        if (n_ > 0) search(std::move(colors));
        CanonicalLabeling out;
        out.form.bytes.push_back(static_cast<char>((n_ >> 8) & 0xff));
        out.form.bytes.push_back(static_cast<char>(n_ & 0xff));
        out.form.bytes.append(best_.begin(), best_.end());
        out.labeling = best_labeling_;
        return out;
    }

private:
    std::uint8_t at(Vertex a, Vertex b) const { return matrix_[static_cast<std::size_t>(a * n_ + b)]; }

    // Ranks keys that start with the current color, so refinement only ever
    // splits cells and keeps their relative order.
    static int rank_by_keys(std::vector<int> &colors, const std::vector<std::vector<int>> &keys) {
        std::vector<int> order(colors.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        int rank = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++rank;
            colors[order[i]] = rank;
        }
        return rank + 1;
    }

    int refine(std::vector<int> &colors) const {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n_));
        int cells = 1 + *std::max_element(colors.begin(), colors.end());
        while (true) {
            for (Vertex v = 0; v < n_; ++v) {
                auto &key = keys[v];
                key.clear();
                key.push_back(colors[v]);
                key.push_back(at(v, v));
                std::size_t start = key.size();
                for (Vertex u : neighbors_[v]) key.push_back(colors[u] * 256 + at(v, u));
                std::sort(key.begin() + static_cast<std::ptrdiff_t>(start), key.end());
            }
            int next = rank_by_keys(colors, keys);
            if (next == cells) return cells;
            cells = next;
        }
    }

    void search(std::vector<int> colors) {
        int cells = refine(colors);
        if (cells == n_) {
            evaluate_leaf(colors);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(cells), 0);
        for (int c : colors) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        for (Vertex v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> child(colors.size());
            for (Vertex w = 0; w < n_; ++w) child[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
            std::vector<std::vector<int>> keys(colors.size());
            for (Vertex w = 0; w < n_; ++w) keys[w] = {child[w]};
            rank_by_keys(child, keys);
            search(std::move(child));
        }
    }

    void evaluate_leaf(const std::vector<int> &labeling) {
        std::vector<Vertex> inverse(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) inverse[labeling[v]] = v;
        // Build the certificate lazily and stop at the first byte that is
        // larger than the current best.
        scratch_.clear();
        bool smaller = best_.empty();
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) {
                auto byte = at(inverse[i], inverse[j]);
                if (!smaller) {
                    auto best_byte = best_[scratch_.size()];
                    if (byte > best_byte) return;
                    if (byte < best_byte) smaller = true;
                }
                scratch_.push_back(byte);
            }
        }
        if (!smaller) return;
        best_ = scratch_;
        best_labeling_ = labeling;
    }

    int n_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::uint8_t> best_;
    std::vector<std::uint8_t> scratch_;
    std::vector<Vertex> best_labeling_;
};

}  // namespace

std::string CanonicalForm::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
        h >>= 4;
    }
    return out;
}

CanonicalLabeling canonical_labeling(const Multigraph &g) { return CanonicalSearch(g).run(); }

CanonicalForm canonical_form(const Multigraph &g) { return canonical_labeling(g).form; }

Multigraph canonical_graph(const Multigraph &g) {
    CanonicalLabeling cl = canonical_labeling(g);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge &e : g.edges()) {
        Vertex a = cl.labeling[e.u], b = cl.labeling[e.v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return Multigraph(g.vertex_count(), std::move(edges));
}

bool isomorphic(const Multigraph &a, const Multigraph &b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace jones
