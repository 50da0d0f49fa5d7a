#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcbf/brute_force.hpp"
#include "pcbf/canonical.hpp"
#include "pcbf/experiment.hpp"
#include "pcbf/io.hpp"
#include "pcbf/necessity.hpp"
#include "pcbf/separation.hpp"
#include "pcbf/synthesis.hpp"

namespace py = pybind11;
using namespace pcbf;

namespace {

// JSON strings keep the binding surface thin; the python side works
// with plain dicts via json.loads/dumps.
LabeledGraph graph_from_text(const std::string& text) {
    return io::graph_from_json(io::json::parse(text));
}

SwitchedSystem system_from_text(const std::string& text) {
    return io::system_from_json(io::json::parse(text));
}

SafetySpec spec_from_text(const std::string& text) {
    io::LoadNotes notes;
    SafetySpec spec = io::spec_from_json(io::json::parse(text), &notes);
    for (const auto& w : notes.warnings) py::print("warning:", w);
    return spec;
}

RatVec vector_from_strings(const std::vector<std::string>& entries) {
    RatVec out;
    for (const auto& e : entries) out.push_back(parse_rational(e));
    return out;
}

std::vector<std::string> vector_to_strings(const RatVec& v) {
    std::vector<std::string> out;
    for (const Rat& e : v) out.push_back(rat_to_string(e));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "path-complete barrier function toolkit";

    py::class_<LabeledGraph>(m, "LabeledGraph")
        .def_static("from_json", &graph_from_text, py::arg("text"))
        .def("to_json", [](const LabeledGraph& g) { return io::graph_to_json(g).dump(); })
        .def_property_readonly("alphabet", [](const LabeledGraph& g) { return g.alphabet().m; })
        .def_property_readonly("nodes", &LabeledGraph::vertex_names)
        .def("num_vertices", &LabeledGraph::num_vertices)
        .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; });

    py::class_<SwitchedSystem>(m, "SwitchedSystem")
        .def_static("from_json", &system_from_text, py::arg("text"))
        .def("to_json", [](const SwitchedSystem& s) { return io::system_to_json(s).dump(); })
        .def_readonly("dimension", &SwitchedSystem::dimension)
        .def_property_readonly("alphabet", [](const SwitchedSystem& s) { return s.alphabet.m; });

    py::class_<SafetySpec>(m, "SafetySpec")
        .def_static("from_json", &spec_from_text, py::arg("text"))
        .def("to_json", [](const SafetySpec& s) { return io::spec_to_json(s).dump(); });

    py::class_<SimulationMap>(m, "SimulationMap")
        .def_readonly("image", &SimulationMap::image);

    m.def("accepts", &accepts, py::arg("graph"), py::arg("word"));
    m.def(
        "is_path_complete",
        [](const LabeledGraph& g) {
            auto r = is_path_complete(g);
            return py::make_tuple(r.complete, r.rejected);
        },
        "returns (complete, shortest_rejected_word)");
    m.def("find_simulation", &find_simulation, py::arg("g"), py::arg("gbar"));
    m.def(
        "compare",
        [](const LabeledGraph& g, const LabeledGraph& gbar) {
            auto r = compare(g, gbar);
            std::string verdict;
            switch (r.verdict) {
                case Ordering::LessOrEqual: verdict = "less_or_equal"; break;
                case Ordering::GreaterOrEqual: verdict = "greater_or_equal"; break;
                case Ordering::Both: verdict = "both"; break;
                case Ordering::Incomparable: verdict = "incomparable"; break;
            }
            return verdict;
        },
        py::arg("g"), py::arg("gbar"));

    m.def(
        "simulate",
        [](const SwitchedSystem& sys, const std::vector<std::string>& x0, const Word& w) {
            Trajectory t = simulate(sys, vector_from_strings(x0), w);
            std::vector<std::vector<std::string>> states;
            for (const RatVec& s : t.states) states.push_back(vector_to_strings(s));
            return states;
        },
        py::arg("system"), py::arg("x0"), py::arg("word"),
        "exact trajectory; states as rational strings");

    m.def(
        "brute_force_unsafe",
        [](const SwitchedSystem& sys, const SafetySpec& spec, int horizon) -> py::object {
            auto w = brute_force_unsafe(sys, spec, horizon);
            if (!w) return py::none();
            return py::dict(py::arg("word") = w->word, py::arg("x0") = w->x0,
                            py::arg("t") = w->t);
        },
        py::arg("system"), py::arg("spec"), py::arg("horizon"));

    m.def(
        "random_stable_system",
        [](int dimension, int alphabet, std::uint64_t seed) {
            return random_stable_system(dimension, Alphabet(alphabet), seed);
        },
        py::arg("dimension"), py::arg("alphabet"), py::arg("seed"));

    m.def(
        "run_counterexample",
        [](const LabeledGraph& g) {
            NecessityInstance inst = run_necessity_pipeline(g);
            py::dict out;
            out["word"] = inst.word;
            out["system"] = io::system_to_json(inst.system).dump();
            out["spec"] = io::spec_to_json(inst.spec).dump();
            py::dict coeffs;
            for (int v = 0; v < g.num_vertices(); ++v)
                coeffs[py::cast(g.vertex_name(v))] = vector_to_strings(inst.coefficients[v]);
            out["coefficients"] = coeffs;
            out["admissible"] = inst.report.overall;
            out["witness"] = io::trajectory_to_json(inst.witness).dump();
            return out;
        },
        py::arg("graph"), "full counterexample pipeline for a non-path-complete graph");

    m.def(
        "verify_separation",
        [](const LabeledGraph& g) {
            SeparationInstance inst = build_separating_instance(g);
            SeparationReport report = verify_separation(inst);
            std::vector<std::string> gaps;
            for (const auto& row : report.non_edge_rows) gaps.push_back(rat_to_string(row.gap));
            return py::make_tuple(report.overall, gaps);
        },
        py::arg("graph"), "(pass, per-non-edge violation gaps)");

    m.def(
        "synth_quadratic",
        [](const SwitchedSystem& sys, const LabeledGraph& g, const SafetySpec& spec,
           double eps) -> py::object {
            SynthOptions options;
            options.eps = eps;
            auto cert = synth_quadratic_pcbf(sys, g, spec, options);
            if (!cert) return py::none();
            return py::cast(io::certificate_to_json(*cert, g).dump());
        },
        py::arg("system"), py::arg("graph"), py::arg("spec"), py::arg("eps") = 1e-6,
        "certificate JSON, or None when infeasible");

    m.def(
        "synth_sos",
        [](const SwitchedSystem& sys, const LabeledGraph& g, const SafetySpec& spec, int degree,
           int mult_degree, double eps) -> py::object {
            SynthOptions options;
            options.eps = eps;
            auto cert = synth_sos_pcbf(sys, g, spec, degree, mult_degree, options);
            if (!cert) return py::none();
            return py::cast(io::certificate_to_json(*cert, g).dump());
        },
        py::arg("system"), py::arg("graph"), py::arg("spec"), py::arg("degree") = 2,
        py::arg("mult_degree") = 2, py::arg("eps") = 1e-6);

    m.def(
        "validate",
        [](const std::string& cert_text, const SwitchedSystem& sys, const LabeledGraph& g,
           const SafetySpec& spec) {
            io::Certificate cert = io::certificate_from_json(io::json::parse(cert_text), g);
            ValidationReport report = std::visit(
                [&](const auto& c) { return validate_certificate(c, sys, g, spec); }, cert);
            return py::make_tuple(report.pass, io::validation_report_to_json(report).dump());
        },
        py::arg("certificate_json"), py::arg("system"), py::arg("graph"), py::arg("spec"));

    m.def(
        "transport",
        [](const std::string& cert_text, const LabeledGraph& g, const LabeledGraph& gbar) {
            auto map = find_simulation(g, gbar);
            if (!map) throw std::invalid_argument("no simulation of gbar by g exists");
            io::Certificate cert = io::certificate_from_json(io::json::parse(cert_text), g);
            return std::visit(
                [&](const auto& c) {
                    return io::certificate_to_json(transport_certificate(c, g, gbar, *map), gbar)
                        .dump();
                },
                cert);
        },
        py::arg("certificate_json"), py::arg("g"), py::arg("gbar"));

    m.def(
        "run_experiment",
        [](const LabeledGraph& g, const LabeledGraph& gbar, int count, int dimension, int alphabet,
           std::uint64_t seed) {
            ExperimentConfig config(g, gbar, data::experiment_spec());
            config.count = count;
            config.dimension = dimension;
            config.alphabet = alphabet;
            config.seed = seed;
            ExperimentTally tally = run_experiment(config);
            py::dict out;
            out["neither"] = tally.neither;
            out["both"] = tally.both;
            out["only_gbar"] = tally.only_gbar;
            out["only_g"] = tally.only_g;
            return out;
        },
        py::arg("g"), py::arg("gbar"), py::arg("count") = 20, py::arg("dimension") = 3,
        py::arg("alphabet") = 2, py::arg("seed") = 0);

    auto data_mod = m.def_submodule("data", "bundled example inputs");
    data_mod.def("graph_a", &data::graph_a);
    data_mod.def("graph_b", &data::graph_b);
    data_mod.def("graph_abar", &data::graph_abar);
    data_mod.def("platoon_graph", &data::platoon_graph);
    data_mod.def("platoon_graph_nonpc", &data::platoon_graph_nonpc);
    data_mod.def("platoon_graph_bar", &data::platoon_graph_bar);
    data_mod.def("platoon_system", &data::platoon_system);
    data_mod.def("platoon_system_modified", &data::platoon_system_modified);
    data_mod.def("platoon_spec", &data::platoon_spec);
    data_mod.def("experiment_spec", &data::experiment_spec);
}
