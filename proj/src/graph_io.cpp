#include "jones/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <vector>

namespace jones {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    return s;
}

void check_printable(std::string_view s) {
    for (char c : s) {
        int v = static_cast<unsigned char>(c);
        if (v < kBias || v > 126) throw ParseError("invalid character in graph6/sparse6 data");
    }
}

void encode_size(std::string &out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
}

// Returns n and advances s past the size field.
int decode_size(std::string_view &s) {
    if (s.empty()) throw ParseError("missing vertex count");
    auto field = [&](std::size_t offset, int count) {
        if (s.size() < offset + static_cast<std::size_t>(count)) throw ParseError("truncated vertex count");
        std::uint64_t n = 0;
        for (int i = 0; i < count; ++i) n = (n << 6) | static_cast<std::uint64_t>(s[offset + i] - kBias);
        return n;
    };
    std::uint64_t n;
    if (s[0] != '~') {
        n = static_cast<std::uint64_t>(s[0] - kBias);
        s.remove_prefix(1);
    } else if (s.size() > 1 && s[1] == '~') {
        n = field(2, 6);
        s.remove_prefix(8);
    } else {
        n = field(1, 3);
        s.remove_prefix(4);
    }
    if (n > (1u << 24)) throw ParseError("vertex count too large");
    return static_cast<int>(n);
}

// Packs bits six at a time, most significant first.
class BitWriter {
public:
    explicit BitWriter(std::string &out) : out_(out) {}
    void put(bool bit) {
        acc_ = (acc_ << 1) | (bit ? 1 : 0);
        if (++fill_ == 6) flush_byte();
    }
    void put_bits(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) put((value >> i) & 1);
    }
    int pending() const { return fill_; }
    void flush_byte() {
        out_.push_back(static_cast<char>(acc_ + kBias));
        acc_ = 0;
        fill_ = 0;
    }

private:
    std::string &out_;
    int acc_ = 0;
    int fill_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::string_view data) : data_(data) {}
    std::size_t remaining() const { return data_.size() * 6 - pos_; }
    bool get() {
        std::size_t byte = pos_ / 6, bit = 5 - pos_ % 6;
        ++pos_;
        return ((data_[byte] - kBias) >> bit) & 1;
    }
    std::uint64_t get_bits(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (get() ? 1 : 0);
        return v;
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

int bits_for(int n) {
    int k = 0;
    for (int x = n - 1; x > 0; x >>= 1) ++k;
    return k;
}

bool parse_int(std::string_view token, long long &out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

}  // namespace

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "g6" || name == "graph6") return GraphFormat::graph6;
    if (name == "s6" || name == "sparse6") return GraphFormat::sparse6;
    if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
    return std::nullopt;
}

std::string format_name(GraphFormat f) {
    switch (f) {
    case GraphFormat::graph6: return "g6";
    case GraphFormat::sparse6: return "s6";
    case GraphFormat::edge_list: return "edges";
    }
    return "?";
}

namespace graph6 {

Multigraph decode(std::string_view s) {
    s = trim(strip_header(trim(s), ">>graph6<<"));
    check_printable(s);
    const int n = decode_size(s);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    if (s.size() != (bits + 5) / 6) throw ParseError("graph6 data length does not match vertex count");
    BitReader reader(s);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (reader.get()) edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

std::string encode(const Multigraph &g) {
    if (!g.is_simple()) throw std::invalid_argument("graph6 cannot encode loops or parallel edges");
    const int n = g.vertex_count();
    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Edge &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
        adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }
    std::string out;
    encode_size(out, static_cast<std::uint64_t>(n));
    BitWriter w(out);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) w.put(adj[static_cast<std::size_t>(i) * n + j] != 0);
    while (w.pending() != 0) w.put(false);
    return out;
}

}  // namespace graph6

namespace sparse6 {

Multigraph decode(std::string_view s) {
    s = trim(strip_header(trim(s), ">>sparse6<<"));
    if (s.empty() || s[0] != ':') throw ParseError("sparse6 data must start with ':'");
    s.remove_prefix(1);
    check_printable(s);
    const int n = decode_size(s);
    const int k = bits_for(n);
    BitReader reader(s);
    std::vector<Edge> edges;
    long long v = 0;
    while (reader.remaining() >= static_cast<std::size_t>(k + 1)) {
        bool b = reader.get();
        auto x = static_cast<long long>(reader.get_bits(k));
        if (b) ++v;
        if (v >= n) break;
        if (x > v)
            v = x;
        else
            edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(v)});
    }
    return Multigraph(n, std::move(edges));
}

std::string encode(const Multigraph &g) {
    const int n = g.vertex_count();
    const int k = bits_for(n);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge &e : g.edges()) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
    std::string out = ":";
    encode_size(out, static_cast<std::uint64_t>(n));
    BitWriter w(out);
    int last = 0;
    for (const Edge &e : edges) {
        if (e.v == last) {
            w.put(false);
        } else {
            w.put(true);
            if (e.v > last + 1) {
                w.put_bits(static_cast<std::uint64_t>(e.v), k);
                w.put(false);
            }
            last = e.v;
        }
        w.put_bits(static_cast<std::uint64_t>(e.u), k);
    }
    if (w.pending() != 0) {
        const int room = 6 - w.pending();
        if (k < 6 && n == (1 << k) && room >= k + 1 && last == n - 2) {
            // A run of 1-bits here would decode as a spurious edge.
            w.put(false);
            while (w.pending() != 0) w.put(true);
        } else {
            while (w.pending() != 0) w.put(true);
        }
    }
    return out;
}

}  // namespace sparse6

namespace edge_list {

Multigraph decode(std::string_view s) {
    std::vector<std::string_view> lines;
    for (std::string_view line : split_lines(s)) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        lines.push_back(t);
    }
    if (lines.empty()) throw ParseError("edge list: missing \"n m\" header");
    auto header = split_ws(lines[0]);
    long long n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
        throw ParseError("edge list: malformed header line");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("edge list: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = split_ws(lines[i]);
        long long u = 0, v = 0;
        if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
            throw ParseError("edge list: malformed edge line " + std::string(lines[i]));
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range in line " + std::string(lines[i]));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string encode(const Multigraph &g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge &e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace edge_list

Multigraph parse(std::string_view bytes, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6: return graph6::decode(bytes);
    case GraphFormat::sparse6: return sparse6::decode(bytes);
    case GraphFormat::edge_list: return edge_list::decode(bytes);
    }
    throw ParseError("unknown format");
}

std::string serialize(const Multigraph &g, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6: return graph6::encode(g);
    case GraphFormat::sparse6: return sparse6::encode(g);
    case GraphFormat::edge_list: return edge_list::encode(g);
    }
    throw std::invalid_argument("unknown format");
}

std::vector<Multigraph> parse_many(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::edge_list) return {edge_list::decode(text)};
    std::vector<Multigraph> out;
    for (std::string_view line : split_lines(text)) {
        std::string_view t = trim(line);
        if (t.empty()) continue;
        out.push_back(parse(t, format));
    }
    return out;
}

}  // namespace jones
