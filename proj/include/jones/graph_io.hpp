#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jones/multigraph.hpp"

namespace jones {

enum class GraphFormat { graph6, sparse6, edge_list };

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accepts "g6", "graph6", "s6", "sparse6", "edges", "edge-list".
std::optional<GraphFormat> format_from_name(std::string_view name);
std::string format_name(GraphFormat f);

/// One graph per call. graph6/sparse6 input may carry the optional
/// ">>graph6<<" / ">>sparse6<<" header and trailing whitespace.
Multigraph parse(std::string_view bytes, GraphFormat format);

/// graph6 output rejects loops and parallel edges (std::invalid_argument).
/// The sparse6 and graph6 strings have no trailing newline; edge-list output
/// ends each line with '\n'.
std::string serialize(const Multigraph &g, GraphFormat format);

/// Splits a file of g6/s6 lines (blank lines skipped) or a single edge-list
/// document into graphs.
std::vector<Multigraph> parse_many(std::string_view text, GraphFormat format);

namespace graph6 {
Multigraph decode(std::string_view s);
std::string encode(const Multigraph &g);
}  // namespace graph6

namespace sparse6 {
Multigraph decode(std::string_view s);
std::string encode(const Multigraph &g);
}  // namespace sparse6

namespace edge_list {
Multigraph decode(std::string_view s);
std::string encode(const Multigraph &g);
}  // namespace edge_list

}  // namespace jones
