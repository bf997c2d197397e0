#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "jones/canonical.hpp"
#include "jones/harness.hpp"
#include "jones/named_graphs.hpp"
#include "jones/report.hpp"
#include "jones/solvers.hpp"

using namespace jones;
using namespace jones::named;

namespace {

std::vector<Multigraph> corpus(CorpusClass cls, int max_n, std::uint64_t seed = 0) {
    CorpusSpec s;
    s.cls = cls;
    s.max_n = max_n;
    s.seed = seed;
    return generate_corpus(s);
}

std::map<int, int> counts_by_n(const std::vector<Multigraph> &graphs) {
    std::map<int, int> out;
    for (const Multigraph &g : graphs) ++out[g.vertex_count()];
    return out;
}

std::filesystem::path temp_file(const std::string &name, const std::string &text) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

int cli(std::vector<std::string> args, std::string *out_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

}  // namespace

TEST_CASE("corpus examples") {
    auto cubic4 = corpus(CorpusClass::cubic_planar_simple, 4);
    REQUIRE(cubic4.size() == 1);
    CHECK(isomorphic(cubic4[0], complete(4)));

    auto multi1 = corpus(CorpusClass::subcubic_planar_multi, 1);
    REQUIRE(multi1.size() == 2);
    std::set<int> loops;
    for (const Multigraph &g : multi1) {
        CHECK(g.vertex_count() == 1);
        loops.insert(g.edge_count());
    }
    CHECK(loops == std::set<int>{0, 1});

    for (const Multigraph &g : corpus(CorpusClass::cubic_planar_simple, 5)) CHECK(g.vertex_count() != 5);
}

TEST_CASE("corpus size limits") {
    CHECK_THROWS_AS(corpus(CorpusClass::subcubic_planar_simple, kMaxSimpleCorpusN + 1), std::invalid_argument);
    CHECK_THROWS_AS(corpus(CorpusClass::subcubic_planar_multi, kMaxMultiCorpusN + 1), std::invalid_argument);
    CHECK(corpus(CorpusClass::subcubic_planar_simple, 0).empty());
}

TEST_CASE("corpus counts") {
    // connected graphs of maximum degree 3; only K3,3 (n = 6) and its
    // subdivision (n = 7) are non-planar below n = 8
    auto simple = counts_by_n(corpus(CorpusClass::subcubic_planar_simple, 7));
    CHECK(simple == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 10}, {6, 28}, {7, 63}});
    // connected cubic planar graphs
    auto cubic = counts_by_n(corpus(CorpusClass::cubic_planar_simple, 12));
    CHECK(cubic == std::map<int, int>{{4, 1}, {6, 1}, {8, 3}, {10, 9}, {12, 32}});
    // multigraphs on two vertices: one to three parallel edges, up to two loops on a single edge
    auto multi = counts_by_n(corpus(CorpusClass::subcubic_planar_multi, 2));
    CHECK(multi[2] == 5);
}

TEST_CASE("corpus members are connected, planar, subcubic and pairwise non-isomorphic") {
    for (auto [cls, n] : {std::pair{CorpusClass::subcubic_planar_simple, 9},
                          std::pair{CorpusClass::subcubic_planar_multi, 6},
                          std::pair{CorpusClass::cubic_planar_simple, 12}}) {
        auto graphs = corpus(cls, n);
        std::set<CanonicalForm> forms;
        std::set<std::string> digests;
        for (const Multigraph &g : graphs) {
            CHECK(is_connected(g));
            CHECK(is_subcubic(g));
            CHECK(is_planar(g));
            if (cls != CorpusClass::subcubic_planar_multi) CHECK(g.is_simple());
            if (cls == CorpusClass::cubic_planar_simple) CHECK(is_cubic(g));
            forms.insert(canonical_form(g));
            digests.insert(canonical_form(g).digest());
        }
        CHECK(forms.size() == graphs.size());
        CHECK(digests.size() == graphs.size());
    }
}

TEST_CASE("corpus order is deterministic and seeds only permute it") {
    auto a = corpus(CorpusClass::subcubic_planar_simple, 7);
    auto b = corpus(CorpusClass::subcubic_planar_simple, 7);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].vertex_count() <= a[i].vertex_count());
    auto s1 = corpus(CorpusClass::subcubic_planar_simple, 7, 42);
    auto s2 = corpus(CorpusClass::subcubic_planar_simple, 7, 42);
    CHECK(s1 == s2);
    CHECK(s1 != a);
    auto key = [](const std::vector<Multigraph> &v) {
        std::multiset<std::string> out;
        for (const Multigraph &g : v) out.insert(canonical_form(g).bytes);
        return out;
    };
    CHECK(key(s1) == key(a));
}

TEST_CASE("file ingest deduplicates") {
    Multigraph k4 = complete(4);
    std::vector<Vertex> perm{2, 0, 3, 1};
    std::string text = graph6::encode(k4) + "\n" + graph6::encode(permute(k4, perm)) + "\n" +
                       graph6::encode(cycle(5)) + "\n\n" + graph6::encode(petersen()) + "\n";
    CorpusSpec s;
    s.cls = CorpusClass::file_ingest;
    s.path = temp_file("jones_ingest.g6", text).string();
    s.format = GraphFormat::graph6;
    auto graphs = generate_corpus(s);
    REQUIRE(graphs.size() == 3);
    CHECK(isomorphic(graphs[0], k4));
    CHECK(isomorphic(graphs[1], cycle(5)));
    s.max_n = 9;
    CHECK(generate_corpus(s).size() == 2);
}

TEST_CASE("run_checks examples") {
    CheckConfig all;
    VerificationRecord k4 = run_checks(complete(4), all);
    CHECK(k4.cp == 1);
    CHECK(k4.fvs == 2);
    CHECK(k4.checks.at("jones2") == Outcome::pass);
    CHECK(k4.checks.at("triple") == Outcome::pass);
    CHECK(k4.fp_fixed == 1);
    CHECK(k4.fp_exact);
    CHECK(k4.flags.three_connected);
    CHECK_FALSE(k4.failed());

    VerificationRecord dd = run_checks(dodecahedron(), all);
    CHECK(dd.checks.at("jones2") == Outcome::pass);
    CHECK(*dd.fvs == 2 * *dd.cp);
    CHECK(dd.flags.cyclically_4ec);
    CHECK(dd.checks.at("munaro") == Outcome::pass);

    VerificationRecord w6 = run_checks(wheel(6), all);
    CHECK(w6.cp == 1);
    CHECK(w6.fvs == 2);
    CHECK(w6.checks.at("triple") == Outcome::pass);
    CHECK_FALSE(w6.checks.contains("jones2"));  // hub has degree 6
}

TEST_CASE("run_checks applicability") {
    CheckConfig all;
    Multigraph k33g(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    VerificationRecord r = run_checks(k33g, all);
    CHECK_FALSE(r.flags.planar);
    CHECK(r.checks.empty());
    CHECK_FALSE(r.fvs.has_value());

    VerificationRecord prism_r = run_checks(prism(), all);
    CHECK_FALSE(prism_r.flags.cyclically_4ec);
    CHECK_FALSE(prism_r.checks.contains("munaro"));

    VerificationRecord c3 = run_checks(cycle(3), all);
    CHECK(c3.fp_fixed == 1);
    CHECK_FALSE(c3.fp_exact);

    CheckConfig only;
    only.checks = {"triple"};
    VerificationRecord t = run_checks(complete(4), only);
    CHECK(t.checks.size() == 1);
    CHECK_FALSE(t.fp_fixed.has_value());
}

TEST_CASE("time limit turns into a skipped record") {
    CheckConfig cfg;
    cfg.time_limit = std::chrono::milliseconds(0);
    VerificationRecord r = run_checks(dodecahedron(), cfg);
    CHECK(r.skipped);
    CHECK_FALSE(r.failed());
    CHECK(r.checks.at("jones2") == Outcome::skipped);
    CHECK(record_to_json(r, false)["status"] == "skipped");
}

TEST_CASE("report stream is identical across worker counts") {
    auto graphs = corpus(CorpusClass::subcubic_planar_multi, 5);
    CheckConfig cfg;
    auto dump = [&](int jobs) {
        std::string s;
        auto records = run_batch(graphs, cfg, jobs);
        for (const auto &r : records) s += record_json(r, false) + "\n";
        return s + summary_json(summarize(records));
    };
    std::string one = dump(1);
    CHECK(one == dump(3));
    CHECK(one.find("wall_ms") == std::string::npos);
}

TEST_CASE("record and summary json") {
    CheckConfig cfg;
    VerificationRecord r = run_checks(complete(4), cfg, 7);
    Json j = record_to_json(r, true);
    CHECK(j["index"] == 7);
    CHECK(j["graph_id"].get<std::string>().size() == 16);
    CHECK(j["values"]["fp_kind"] == "exact");
    CHECK(j["status"] == "ok");
    CHECK(j.contains("wall_ms"));
    CHECK_FALSE(record_to_json(r, false).contains("wall_ms"));

    Summary s = summarize({r, run_checks(cycle(4), cfg, 8)});
    Json sj = summary_to_json(s);
    CHECK(sj["summary"] == true);
    CHECK(sj["graphs"] == 2);
    CHECK(sj["failures"] == 0);
    CHECK(sj["checks"]["jones2"]["pass"] == 2);
    CHECK(sj["min_2fp_minus_fvs"] == 0);
}

TEST_CASE("witness json") {
    Json f = witness_json(fvs_exact(complete(4)));
    CHECK(f["kind"] == "fvs");
    CHECK(f["size"] == 2);
    CHECK(f["vertices"].size() == 2);
    CHECK(f["cycles"].empty());
    Json c = witness_json(cp_exact(prism()));
    CHECK(c["kind"] == "cp");
    CHECK(c["cycles"].size() == 2);
    CHECK(c["vertices"].empty());
}

TEST_CASE("cli") {
    std::string out;
    auto k4 = temp_file("jones_k4.g6", "C~\n").string();
    CHECK(cli({"solve", "--what", "fvs,cp", "--format", "g6", "--input", k4}, &out) == 0);
    CHECK(out == "{\"fvs\":2,\"cp\":1}\n");
    CHECK(cli({"solve", "--what", "cp,fvs,fp", "--input", k4}, &out) == 0);
    CHECK(out == "{\"cp\":1,\"fvs\":2,\"fp\":1}\n");
    CHECK(cli({"solve", "--witness", "--input", k4}, &out) == 0);
    CHECK(Json::parse(out)["witnesses"]["fvs"]["kind"] == "fvs");

    CHECK(cli({"cuts", "--input", k4, "--embedding"}, &out) == 0);
    Json cuts = Json::parse(out);
    CHECK(cuts["edge_connectivity"] == 3);
    CHECK(cuts["cuts"]["3"].size() == 4);
    CHECK(cuts.contains("rotation"));

    CHECK(cli({"verify", "--class", "subcubic-planar-multi", "--max-n", "4", "--jobs", "2"}, &out) == 0);
    Json last = Json::parse(out.substr(out.rfind('\n', out.size() - 2) + 1));
    CHECK(last["summary"] == true);
    CHECK(last["graphs"] == 36);

    CHECK(cli({"verify", "--input", k4}, &out) == 0);
    CHECK(cli({"verify", "--class", "cubic-planar-simple", "--max-n", "6", "--check", "jones2,bogus"}) == 2);
    CHECK(cli({"verify", "--class", "nope", "--max-n", "6"}) == 2);
    CHECK(cli({"solve", "--input", "/nonexistent/file"}) == 2);
    CHECK(cli({"solve"}) == 2);
    CHECK(cli({}) == 2);
    auto bad = temp_file("jones_bad.edges", "3 2\n0 1\n").string();
    CHECK(cli({"solve", "--input", bad}) == 2);
}
