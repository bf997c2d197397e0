#pragma once

#include <optional>
#include <string_view>

#include "jones/multigraph.hpp"

namespace jones::named {

Multigraph path(int n);
Multigraph cycle(int n);
Multigraph complete(int n);
Multigraph empty(int n);
/// Hub 0 joined to a rim cycle 1..k; wheel(3) is K4.
Multigraph wheel(int rim);
/// Two vertices joined by `edges` parallel edges.
Multigraph theta(int edges = 3);
/// Triangles 0-1-2 and 3-4-5 with rungs 0-3, 1-4, 2-5.
Multigraph prism();
Multigraph cube();
Multigraph petersen();
Multigraph dodecahedron();
/// K4 minus the edge 2-3; vertices 2 and 3 have degree 2.
Multigraph diamond();
/// Two diamonds joined at their degree-2 vertices by two edges; cubic on 8.
Multigraph double_diamond();
/// Triangles 0-1-2 and 3-4-5 plus the bridge 2-3.
Multigraph bridged_triangles();

/// Looks up the names above ("k4", "c5", "w6", "prism", "dodecahedron", ...).
std::optional<Multigraph> by_name(std::string_view name);

}  // namespace jones::named
