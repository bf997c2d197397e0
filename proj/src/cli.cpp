#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "jones/canonical.hpp"
#include "jones/harness.hpp"
#include "jones/report.hpp"
#include "jones/structure.hpp"

namespace jones {

namespace {

struct Common {
    std::string input;
    bool use_stdin = false;
    std::string format;
    std::string output;
    int jobs = 1;
    long long time_limit_ms = 60000;
};

void add_common(CLI::App *cmd, Common &c) {
    auto *in = cmd->add_option("--input", c.input, "Graph file")->check(CLI::ExistingFile);
    auto *sin = cmd->add_flag("--stdin", c.use_stdin, "Read graphs from standard input");
    in->excludes(sin);
    cmd->add_option("--format", c.format, "g6, s6 or edges (default: detect)")
        ->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edges", "edge-list"}));
    cmd->add_option("--output", c.output, "Write the report here instead of stdout");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit-ms", c.time_limit_ms, "Per-graph solver time limit")->check(CLI::PositiveNumber);
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GraphFormat detect_format(std::string_view text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string_view::npos) throw ParseError("empty input");
    if (text.substr(i).starts_with(">>sparse6<<") || text[i] == ':' || text[i] == ';') return GraphFormat::sparse6;
    if (text.substr(i).starts_with(">>graph6<<")) return GraphFormat::graph6;
    if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '#') return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

std::string slurp(std::istream &in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Multigraph> read_graphs(const Common &c) {
    std::string text;
    if (c.use_stdin) {
        text = slurp(std::cin);
    } else if (!c.input.empty()) {
        std::ifstream f(c.input, std::ios::binary);
        if (!f) throw UsageError("cannot read " + c.input);
        text = slurp(f);
    } else {
        throw UsageError("one of --input or --stdin is required");
    }
    GraphFormat f = c.format.empty() ? detect_format(text) : *format_from_name(c.format);
    auto graphs = parse_many(text, f);
    if (graphs.empty()) throw ParseError("no graphs in input");
    return graphs;
}

// Routes output to --output when given.
class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot write " + path);
            out_ = &file_;
        }
    }
    std::ostream &operator*() { return *out_; }

private:
    std::ofstream file_;
    std::ostream *out_;
};

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_solve(const Common &c, const std::string &what, bool witness, const std::string &rotation_path,
              std::ostream &out) {
    auto wants = split_list(what);
    for (const std::string &w : wants)
        if (w != "fvs" && w != "cp" && w != "fp") throw UsageError("--what accepts fvs, cp, fp");
    auto graphs = read_graphs(c);
    Sink sink(c.output, out);
    for (const Multigraph &g : graphs) {
        SolverLimits limits;
        limits.deadline = Deadline::after(std::chrono::milliseconds(c.time_limit_ms));
        Json j = Json::object(), witnesses = Json::object();
        for (const std::string &w : wants) {
            if (w == "fvs") {
                FeedbackSet s = fvs_exact(g, limits);
                j["fvs"] = s.size;
                witnesses["fvs"] = witness_json(s);
            } else if (w == "cp") {
                CyclePacking p = cp_exact(g, limits);
                j["cp"] = p.size;
                witnesses["cp"] = witness_json(p);
            } else {
                RotationSystem rot;
                if (!rotation_path.empty()) {
                    std::ifstream f(rotation_path);
                    if (!f) throw UsageError("cannot read " + rotation_path);
                    rot = parse_rotation(g, slurp(f));
                } else if (is_planar(g)) {
                    rot = planar_embedding(g);
                } else {
                    j["fp"] = nullptr;
                    continue;
                }
                FacePacking p = fp_fixed_embedding(g, rot, limits.deadline);
                j["fp"] = p.size;
                witnesses["fp"] = witness_json(p);
            }
        }
        if (witness) j["witnesses"] = witnesses;
        *sink << j.dump() << '\n';
    }
    return 0;
}

int cmd_cuts(const Common &c, bool embedding, std::ostream &out) {
    auto graphs = read_graphs(c);
    Sink sink(c.output, out);
    for (const Multigraph &g : graphs) {
        Json cuts = Json::object();
        for (int k = 1; k <= 3; ++k) {
            Json list = Json::array();
            for (const EdgeCut &cut : enumerate_cuts(g, k)) list.push_back(cut_json(cut));
            cuts[std::to_string(k)] = list;
        }
        Json j = {{"n", g.vertex_count()},
                  {"m", g.edge_count()},
                  {"edge_connectivity", edge_connectivity(g)},
                  {"vertex_connectivity", vertex_connectivity(g)},
                  {"essentially_4ec", is_essentially_4ec(g)},
                  {"cyclically_4ec", is_cyclically_4ec(g)},
                  {"planar", is_planar(g)},
                  {"cuts", cuts}};
        if (embedding && is_planar(g)) j["rotation"] = format_rotation(g, planar_embedding(g));
        *sink << j.dump() << '\n';
    }
    return 0;
}

int cmd_reduce(const Common &c, std::ostream &out) {
    auto graphs = read_graphs(c);
    Sink sink(c.output, out);
    bool ok = true;
    for (const Multigraph &g : graphs) {
        SolverLimits limits;
        limits.deadline = Deadline::after(std::chrono::milliseconds(c.time_limit_ms));
        PipelineResult r = reduce_pipeline(g, limits);
        ok = ok && r.witnesses_verified;
        for (const PipelineNode &n : r.nodes) {
            if (n.certificate && !n.certificate->holds()) ok = false;
            if (n.leaf == LeafClass::unresolved) ok = false;
        }
        *sink << pipeline_json(g, r).dump() << '\n';
    }
    return ok ? 0 : 1;
}

std::set<std::string> parse_checks(const std::string &s) {
    std::set<std::string> out;
    for (const std::string &name : split_list(s)) {
        if (std::find(kAllChecks.begin(), kAllChecks.end(), name) == kAllChecks.end())
            throw UsageError("unknown check " + name);
        out.insert(name);
    }
    return out;
}

CorpusSpec corpus_spec(const Common &c, const std::string &cls, int max_n, std::uint64_t seed) {
    CorpusSpec spec;
    spec.max_n = max_n;
    spec.seed = seed;
    spec.jobs = c.jobs;
    auto parsed = corpus_class_from_name(cls);
    if (!parsed) throw UsageError("unknown class " + cls);
    spec.cls = *parsed;
    return spec;
}

int cmd_verify(const Common &c, const std::string &cls, int max_n, const std::string &checks, std::uint64_t seed,
               bool timings, std::ostream &out) {
    std::vector<Multigraph> graphs;
    if (c.use_stdin || !c.input.empty()) {
        if (!cls.empty() && cls != "file-ingest") throw UsageError("--class conflicts with --input/--stdin");
        // deduplicate like the file-ingest corpus
        std::set<std::string> seen;
        for (Multigraph &g : read_graphs(c)) {
            if (max_n > 0 && g.vertex_count() > max_n) continue;
            if (seen.insert(canonical_form(g).bytes).second) graphs.push_back(std::move(g));
        }
    } else {
        if (cls.empty() || cls == "file-ingest") throw UsageError("verify needs --class or an input");
        if (max_n <= 0) throw UsageError("--max-n is required with --class");
        graphs = generate_corpus(corpus_spec(c, cls, max_n, seed));
    }
    CheckConfig config;
    config.checks = parse_checks(checks);
    config.time_limit = std::chrono::milliseconds(c.time_limit_ms);
    config.with_timings = timings;
    auto records = run_batch(graphs, config, c.jobs);
    Sink sink(c.output, out);
    for (const VerificationRecord &r : records) *sink << record_json(r, timings) << '\n';
    Summary s = summarize(records);
    *sink << summary_json(s) << '\n';
    return s.failures == 0 ? 0 : 1;
}

int cmd_generate(const Common &c, const std::string &cls, int max_n, const std::string &out_path,
                 std::uint64_t seed, std::ostream &out) {
    if (max_n <= 0) throw UsageError("--max-n is required");
    if (cls == "file-ingest") throw UsageError("generate needs a generated class");
    auto graphs = generate_corpus(corpus_spec(c, cls, max_n, seed));
    Sink sink(out_path.empty() ? c.output : out_path, out);
    for (const Multigraph &g : graphs) *sink << serialize(g, GraphFormat::sparse6) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact fvs / cycle packing workbench for subcubic planar graphs", "jonesbench"};
    app.require_subcommand(1);

    Common solve_c, cuts_c, reduce_c, verify_c, gen_c;
    std::string what = "fvs,cp", rotation;
    bool witness = false, embedding = false, timings = false;
    std::string cls, checks, out_path;
    int max_n = 0;
    std::uint64_t seed = 0;

    auto *solve = app.add_subcommand("solve", "Exact fvs, cp and fixed-embedding fp");
    add_common(solve, solve_c);
    solve->add_option("--what", what, "Comma list of fvs, cp, fp");
    solve->add_flag("--witness", witness, "Include witnesses");
    solve->add_option("--rotation", rotation, "Rotation system for fp")->check(CLI::ExistingFile);

    auto *cuts = app.add_subcommand("cuts", "Minimal 1-, 2- and 3-edge cuts and connectivity");
    add_common(cuts, cuts_c);
    cuts->add_flag("--embedding", embedding, "Include a planar rotation system");

    auto *reduce = app.add_subcommand("reduce", "Reduction pipeline with certificates");
    add_common(reduce, reduce_c);

    auto *verify = app.add_subcommand("verify", "Batch bound checks over a corpus");
    add_common(verify, verify_c);
    verify->add_option("--class", cls, "Corpus class");
    verify->add_option("--max-n", max_n, "Largest vertex count");
    verify->add_option("--check", checks, "Comma list of jones2, triple, munaro, facepack");
    verify->add_option("--seed", seed, "Shuffle seed (0 keeps canonical order)");
    verify->add_flag("--timings", timings, "Add wall_ms to records");

    auto *generate = app.add_subcommand("generate", "Write a corpus as sparse6 lines");
    add_common(generate, gen_c);
    generate->add_option("--class", cls, "Corpus class")->required();
    generate->add_option("--max-n", max_n, "Largest vertex count")->required();
    generate->add_option("--out", out_path, "Output file");
    generate->add_option("--seed", seed, "Shuffle seed (0 keeps canonical order)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) return cmd_solve(solve_c, what, witness, rotation, out);
        if (*cuts) return cmd_cuts(cuts_c, embedding, out);
        if (*reduce) return cmd_reduce(reduce_c, out);
        if (*verify) return cmd_verify(verify_c, cls, max_n, checks, seed, timings, out);
        if (*generate) return cmd_generate(gen_c, cls, max_n, out_path, seed, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const LimitExceeded &e) {
        err << "limit: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace jones
