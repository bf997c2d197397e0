#include "jones/independent_set.hpp"

#include <algorithm>

namespace jones {

ConflictGraph::ConflictGraph(int size)
    : adj_(static_cast<std::size_t>(size), boost::dynamic_bitset<>(static_cast<std::size_t>(size))) {}

void ConflictGraph::add_conflict(int a, int b) {
    if (a == b) return;
    adj_[a].set(static_cast<std::size_t>(b));
    adj_[b].set(static_cast<std::size_t>(a));
}

namespace {

using Bits = boost::dynamic_bitset<>;

class IndependentSetSearch {
public:
    IndependentSetSearch(const ConflictGraph &g, const Deadline &deadline) : g_(g), deadline_(deadline) {
        const auto n = static_cast<std::size_t>(g.size());
        compatible_.reserve(n);
        for (int a = 0; a < g.size(); ++a) {
            Bits row = ~g.row(a);
            row.reset(static_cast<std::size_t>(a));
            compatible_.push_back(std::move(row));
        }
    }

    std::vector<int> run() {
        best_ = greedy();
        Bits all(static_cast<std::size_t>(g_.size()));
        all.set();
        std::vector<int> chosen;
        if (g_.size() > 0) expand(all, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::vector<int> greedy() const {
        Bits left(static_cast<std::size_t>(g_.size()));
        left.set();
        std::vector<int> out;
        while (left.any()) {
            std::size_t pick = Bits::npos, pick_degree = 0;
            for (auto v = left.find_first(); v != Bits::npos; v = left.find_next(v)) {
                std::size_t d = (g_.row(static_cast<int>(v)) & left).count();
                if (pick == Bits::npos || d < pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            out.push_back(static_cast<int>(pick));
            left.reset(pick);
            left &= compatible_[pick];
        }
        return out;
    }

    // Candidates are colored so that each color class is a clique of the
    // conflict graph; at most one member per class can join the set.
    void expand(Bits candidates, std::vector<int> &chosen) {
        deadline_.poll(nodes_);
        std::vector<int> order, bound;
        Bits uncolored = candidates;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bits cls = uncolored;
            for (auto v = cls.find_first(); v != Bits::npos; v = cls.find_first()) {
                order.push_back(static_cast<int>(v));
                bound.push_back(color);
                uncolored.reset(v);
                cls.reset(v);
                cls &= g_.row(static_cast<int>(v));
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (chosen.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const int v = order[i];
            chosen.push_back(v);
            Bits next = candidates & compatible_[static_cast<std::size_t>(v)];
            if (next.none()) {
                if (chosen.size() > best_.size()) best_ = chosen;
            } else {
                expand(std::move(next), chosen);
            }
            chosen.pop_back();
            candidates.reset(static_cast<std::size_t>(v));
        }
    }

    const ConflictGraph &g_;
    const Deadline &deadline_;
    std::vector<Bits> compatible_;
    std::vector<int> best_;
    std::size_t nodes_ = 0;
};

}  // namespace

std::vector<int> maximum_independent_set(const ConflictGraph &g, const Deadline &deadline) {
    return IndependentSetSearch(g, deadline).run();
}

}  // namespace jones
