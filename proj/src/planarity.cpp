#include <algorithm>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "jones/structure.hpp"

namespace jones {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Underlying simple graph: one Boost edge per adjacent vertex pair, in order
// of first appearance. pairs[i] is the (min, max) pair of Boost edge i.
struct SimpleView {
    BoostGraph graph;
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

SimpleView simple_view(const Multigraph &g) {
    SimpleView view{BoostGraph(static_cast<std::size_t>(g.vertex_count())), {}};
    std::map<std::pair<Vertex, Vertex>, int> seen;
    for (const Edge &e : g.edges()) {
        if (e.is_loop()) continue;
        auto key = std::pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (seen.contains(key)) continue;
        int index = static_cast<int>(view.pairs.size());
        seen.emplace(key, index);
        view.pairs.push_back(key);
        boost::add_edge(static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second), index, view.graph);
    }
    return view;
}

}  // namespace

Vertex end_vertex(const Multigraph &g, EdgeEnd h) {
    const Edge &e = g.edge(end_edge(h));
    return (h & 1) ? e.v : e.u;
}

void validate_rotation(const Multigraph &g, const RotationSystem &rot) {
    if (static_cast<int>(rot.order.size()) != g.vertex_count())
        throw InvalidRotation("rotation system has wrong vertex count");
    std::vector<char> seen(static_cast<std::size_t>(2 * g.edge_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (EdgeEnd h : rot.order[v]) {
            if (h < 0 || h >= 2 * g.edge_count()) throw InvalidRotation("edge-end out of range");
            if (end_vertex(g, h) != v) throw InvalidRotation("edge-end listed at the wrong vertex");
            if (seen[h]++) throw InvalidRotation("edge-end listed twice");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidRotation("edge-end missing from rotation");
}

std::string format_rotation(const Multigraph &g, const RotationSystem &rot) {
    validate_rotation(g, rot);
    std::ostringstream out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (EdgeEnd h : rot.order[v]) out << ' ' << end_edge(h);
        out << '\n';
    }
    return out.str();
}

RotationSystem parse_rotation(const Multigraph &g, std::string_view text) {
    RotationSystem rot;
    rot.order.resize(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> listed(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> loop_seen(static_cast<std::size_t>(g.edge_count()), 0);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InvalidRotation("rotation line without ':'");
        Vertex v = 0;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (const std::exception &) {
            throw InvalidRotation("bad vertex in rotation line: " + line);
        }
        if (!g.has_vertex(v) || listed[v]++) throw InvalidRotation("bad or repeated vertex in rotation: " + line);
        std::istringstream ids(line.substr(colon + 1));
        std::string tok;
        while (ids >> tok) {
            EdgeId e = 0;
            try {
                e = std::stoi(tok);
            } catch (const std::exception &) {
                throw InvalidRotation("bad edge id in rotation: " + tok);
            }
            if (e < 0 || e >= g.edge_count()) throw InvalidRotation("edge id out of range in rotation: " + tok);
            const Edge &ed = g.edge(e);
            EdgeEnd h;
            if (ed.is_loop()) {
                if (loop_seen[e] >= 2) throw InvalidRotation("loop listed more than twice");
                h = 2 * e + loop_seen[e]++;
            } else {
                h = 2 * e + (ed.u == v ? 0 : 1);
            }
            rot.order[v].push_back(h);
        }
    }
    validate_rotation(g, rot);
    return rot;
}

bool is_planar(const Multigraph &g) {
    SimpleView view = simple_view(g);
    return boost::boyer_myrvold_planarity_test(view.graph);
}

RotationSystem planar_embedding(const Multigraph &g) {
    SimpleView view = simple_view(g);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<BoostEdge>> embedding(n);
    auto emb_map = boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, view.graph));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = view.graph,
                                             boost::boyer_myrvold_params::embedding = emb_map))
        throw NotPlanar("graph is not planar");

    // Parallel copies per vertex pair, increasing edge id.
    std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> copies;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge &ed = g.edge(e);
        if (!ed.is_loop()) copies[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    auto edge_index = boost::get(boost::edge_index, view.graph);

    RotationSystem rot;
    rot.order.resize(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const BoostEdge &be : embedding[static_cast<std::size_t>(v)]) {
            auto pair = view.pairs[static_cast<std::size_t>(edge_index[be])];
            const auto &ids = copies.at(pair);
            auto end_at_v = [&](EdgeId e) { return 2 * e + (g.edge(e).u == v ? 0 : 1); };
            if (v == pair.first)
                for (EdgeId e : ids) rot.order[v].push_back(end_at_v(e));
            else
                for (auto it = ids.rbegin(); it != ids.rend(); ++it) rot.order[v].push_back(end_at_v(*it));
        }
        for (EdgeId e : g.incident(v)) {
            if (!g.edge(e).is_loop()) continue;
            // Each loop shows up twice in the incidence list; emit it once.
            if (std::find(rot.order[v].begin(), rot.order[v].end(), 2 * e) != rot.order[v].end()) continue;
            rot.order[v].push_back(2 * e);
            rot.order[v].push_back(2 * e + 1);
        }
    }
    validate_rotation(g, rot);
    return rot;
}

std::vector<EdgeId> Face::edges() const {
    std::vector<EdgeId> out;
    out.reserve(walk.size());
    for (EdgeEnd h : walk) out.push_back(end_edge(h));
    return out;
}

std::vector<Face> faces(const Multigraph &g, const RotationSystem &rot) {
    validate_rotation(g, rot);
    const std::size_t ends = static_cast<std::size_t>(2 * g.edge_count());
    std::vector<EdgeEnd> successor(ends);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto &order = rot.order[v];
        for (std::size_t i = 0; i < order.size(); ++i) successor[order[i]] = order[(i + 1) % order.size()];
    }
    std::vector<char> used(ends, 0);
    std::vector<Face> out;
    for (EdgeEnd start = 0; start < static_cast<EdgeEnd>(ends); ++start) {
        if (used[start]) continue;
        Face face;
        std::vector<int> tails;
        EdgeEnd h = start;
        do {
            used[h] = 1;
            face.walk.push_back(h);
            tails.push_back(end_vertex(g, h));
            h = successor[opposite_end(h)];
        } while (h != start);
        face.boundary = VertexSet(tails);
        std::vector<EdgeId> edge_ids = face.edges();
        std::sort(edge_ids.begin(), edge_ids.end());
        face.is_cycle = face.boundary.size() == tails.size() &&
                        std::adjacent_find(edge_ids.begin(), edge_ids.end()) == edge_ids.end();
        out.push_back(std::move(face));
    }
    return out;
}

}  // namespace jones
