#pragma once

#include "jones/multigraph.hpp"

namespace jones::detail {

/// Some feedback vertex set (not necessarily minimum) found by reductions
/// plus repeated max-degree deletion.
VertexSet greedy_feedback_set(const Multigraph &g);

}  // namespace jones::detail
