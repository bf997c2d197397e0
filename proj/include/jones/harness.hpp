#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jones/graph_io.hpp"
#include "jones/multigraph.hpp"

namespace jones {

// ---- corpus -------------------------------------------------------------

enum class CorpusClass { cubic_planar_simple, subcubic_planar_simple, subcubic_planar_multi, file_ingest };

std::optional<CorpusClass> corpus_class_from_name(std::string_view name);
std::string_view corpus_class_name(CorpusClass c);

inline constexpr int kMaxSimpleCorpusN = 14;
inline constexpr int kMaxMultiCorpusN = 10;

struct CorpusSpec {
    CorpusClass cls = CorpusClass::subcubic_planar_simple;
    int max_n = 0;
    /// 0 keeps the natural order (by n, then canonical form); anything else
    /// shuffles deterministically.
    std::uint64_t seed = 0;
    int min_n = 1;
    // file-ingest only
    std::string path;
    GraphFormat format = GraphFormat::graph6;
    /// Upper bound on graphs held at one level before LimitExceeded.
    std::size_t cap = 20'000'000;
    int jobs = 1;
};

/// Connected graphs of the class with min_n <= n <= max_n, pairwise
/// non-isomorphic. Throws invalid_argument when max_n is above the class
/// limit. For file-ingest, graphs read from `path` are deduplicated and
/// those with n > max_n (when max_n > 0) are dropped.
std::vector<Multigraph> generate_corpus(const CorpusSpec &spec);

/// Connected subcubic planar graphs on exactly n vertices, one per
/// isomorphism class, built level by level. `keep` prunes intermediate
/// levels (it sees the level's n); pass {} to keep everything.
std::vector<Multigraph> connected_subcubic_planar(int n, bool multigraph,
                                                   const std::function<bool(const Multigraph &, int)> &keep = {},
                                                   int jobs = 1, std::size_t cap = 20'000'000);

// ---- checks -------------------------------------------------------------

inline const std::vector<std::string> kAllChecks = {"jones2", "triple", "munaro", "facepack"};

struct CheckConfig {
    /// Empty means every applicable check.
    std::set<std::string> checks;
    std::chrono::milliseconds time_limit{60000};
    bool with_timings = false;
};

struct GraphFlags {
    bool planar = false;
    bool subcubic = false;
    bool cubic = false;
    bool simple = false;
    bool cyclically_4ec = false;
    bool three_connected = false;
};

enum class Outcome { pass, fail, reported, skipped };
std::string_view outcome_name(Outcome o);

struct VerificationRecord {
    std::size_t index = 0;
    std::string graph_id;
    int n = 0;
    int m = 0;
    GraphFlags flags;
    std::optional<int> cp, fvs, fp_fixed;
    /// True when fp_fixed is fp itself (3-connected simple planar graph, so
    /// the embedding is unique); otherwise it is a lower bound.
    bool fp_exact = false;
    std::map<std::string, Outcome> checks;
    std::map<std::string, double> wall_ms;
    bool conjecture_violation = false;
    bool skipped = false;
    std::string note;

    /// Assertion-level failures only; facepack is never one.
    bool failed() const;
};

VerificationRecord run_checks(const Multigraph &g, const CheckConfig &config, std::size_t index = 0);

/// Per-graph parallelism with results in input order.
std::vector<VerificationRecord> run_batch(const std::vector<Multigraph> &graphs, const CheckConfig &config, int jobs);

struct Summary {
    std::size_t graphs = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::size_t conjecture_violations = 0;
    std::map<std::string, std::map<std::string, std::size_t>> per_check;
    std::optional<int> min_facepack_gap;  // min of 2 fp - fvs over exact fp values
};

Summary summarize(const std::vector<VerificationRecord> &records);

// ---- reports ------------------------------------------------------------

std::string record_json(const VerificationRecord &r, bool with_timings);
std::string summary_json(const Summary &s);

// ---- command line -------------------------------------------------------

/// Returns the process exit code: 0 success, 1 assertion failures, 2 usage
/// or input errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace jones
