#pragma once

#include <json.hpp>

#include "jones/harness.hpp"
#include "jones/reduction.hpp"
#include "jones/solvers.hpp"

namespace jones {

using Json = nlohmann::ordered_json;

Json witness_json(const FeedbackSet &s);
Json witness_json(const CyclePacking &p);
Json witness_json(const FacePacking &p);

/// "items" and "informational" list every inequality; "labels" folds them
/// per label, so "d" is true only when every (i, x) instance holds.
Json certificate_json(const Certificate &c);
Json pipeline_json(const Multigraph &g, const PipelineResult &r);
Json cut_json(const EdgeCut &c);

Json record_to_json(const VerificationRecord &r, bool with_timings);
Json summary_to_json(const Summary &s);

}  // namespace jones
