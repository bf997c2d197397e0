#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jones/canonical.hpp"
#include "jones/graph_io.hpp"
#include "jones/harness.hpp"
#include "jones/named_graphs.hpp"
#include "jones/reduction.hpp"
#include "jones/report.hpp"
#include "jones/solvers.hpp"
#include "jones/structure.hpp"

namespace py = pybind11;
using namespace jones;

namespace {

py::object to_python(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

GraphFormat format_arg(const std::string &name) {
    auto f = format_from_name(name);
    if (!f) throw py::value_error("unknown format " + name);
    return *f;
}

Multigraph make_graph(int n, const std::vector<std::pair<int, int>> &edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v});
    return Multigraph(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_pairs(const Multigraph &g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge &e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

PYBIND11_MODULE(jonesbench, m) {
    m.doc() = "Exact fvs / cycle packing solvers, cut analysis and reductions for subcubic planar multigraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Multigraph::vertex_count)
        .def_property_readonly("m", &Multigraph::edge_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("degree", &Multigraph::degree)
        .def("is_simple", &Multigraph::is_simple)
        .def("__eq__", &Multigraph::operator==)
        .def("__repr__", [](const Multigraph &g) {
            std::ostringstream ss;
            ss << "Multigraph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return ss.str();
        });

    m.def("parse", [](const std::string &text, const std::string &fmt) { return parse(text, format_arg(fmt)); },
          py::arg("text"), py::arg("format") = "g6");
    m.def("parse_many",
          [](const std::string &text, const std::string &fmt) { return parse_many(text, format_arg(fmt)); },
          py::arg("text"), py::arg("format") = "g6");
    m.def("serialize", [](const Multigraph &g, const std::string &fmt) { return serialize(g, format_arg(fmt)); },
          py::arg("g"), py::arg("format") = "s6");
    m.def("named", [](const std::string &name) {
        auto g = named::by_name(name);
        if (!g) throw py::value_error("unknown graph " + name);
        return *g;
    });

    m.def("canonical_digest", [](const Multigraph &g) { return canonical_form(g).digest(); });
    m.def("canonical_graph", &canonical_graph);
    m.def("isomorphic", &isomorphic);

    m.def("is_planar", &is_planar);
    m.def("is_connected", &is_connected);
    m.def("edge_connectivity", &edge_connectivity);
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("is_essentially_4ec", &is_essentially_4ec);
    m.def("is_cyclically_4ec", &is_cyclically_4ec);
    m.def("cuts", [](const Multigraph &g, int k) {
        Json out = Json::array();
        for (const EdgeCut &c : enumerate_cuts(g, k)) out.push_back(cut_json(c));
        return to_python(out);
    });
    m.def("rotation", [](const Multigraph &g) { return format_rotation(g, planar_embedding(g)); });

    m.def("fvs", [](const Multigraph &g) { return to_python(witness_json(fvs_exact(g))); });
    m.def("cp", [](const Multigraph &g) { return to_python(witness_json(cp_exact(g))); });
    m.def("fp", [](const Multigraph &g) { return to_python(witness_json(fp_fixed_embedding(g, planar_embedding(g)))); });
    m.def("fvs_bruteforce", [](const Multigraph &g) { return fvs_bruteforce(g).size; });
    m.def("cp_bruteforce", [](const Multigraph &g) { return cp_bruteforce(g).size; });

    m.def("reduce", [](const Multigraph &g) { return to_python(pipeline_json(g, reduce_pipeline(g))); });

    m.def(
        "generate",
        [](const std::string &cls, int max_n, std::uint64_t seed) {
            auto c = corpus_class_from_name(cls);
            if (!c || *c == CorpusClass::file_ingest) throw py::value_error("unknown class " + cls);
            CorpusSpec s;
            s.cls = *c;
            s.max_n = max_n;
            s.seed = seed;
            py::gil_scoped_release release;
            return generate_corpus(s);
        },
        py::arg("cls"), py::arg("max_n"), py::arg("seed") = 0);

    m.def(
        "run_checks",
        [](const Multigraph &g, std::vector<std::string> checks, long long time_limit_ms) {
            CheckConfig cfg;
            cfg.checks = {checks.begin(), checks.end()};
            cfg.time_limit = std::chrono::milliseconds(time_limit_ms);
            VerificationRecord r;
            {
                py::gil_scoped_release release;
                r = run_checks(g, cfg);
            }
            return to_python(record_to_json(r, false));
        },
        py::arg("g"), py::arg("checks") = std::vector<std::string>{}, py::arg("time_limit_ms") = 60000);

    m.def(
        "cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            int rc = run_cli(args, out, err);
            return py::make_tuple(rc, out.str(), err.str());
        },
        "Runs a jonesbench command line; returns (exit_code, stdout, stderr).");
}
