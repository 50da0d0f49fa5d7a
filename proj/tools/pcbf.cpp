// pcbf: path-complete barrier function toolkit for discrete-time
// switched systems. Subcommands cover graph checks, the constructive
// counterexample and separation pipelines, certificate synthesis and
// validation, simulation, brute-force search, and the random-system
// experiment harness.
//
// Exit codes: 0 success / feasible / complete; 1 property violated
// (not path-complete, infeasible, unsafe, failed validation);
// 2 usage or I/O error; 3 backend failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "pcbf/brute_force.hpp"
#include "pcbf/canonical.hpp"
#include "pcbf/experiment.hpp"
#include "pcbf/io.hpp"
#include "pcbf/necessity.hpp"
#include "pcbf/separation.hpp"
#include "pcbf/synthesis.hpp"

namespace fs = std::filesystem;
using namespace pcbf;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kBackend = 3;

Word parse_word(const std::string& text) {
    Word w;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')') continue;
        if (c < '0' || c > '9') throw std::invalid_argument("word letters are digits 1..9");
        w.push_back(c - '0');
    }
    return w;
}

RatVec parse_vector(const std::string& text) {
    RatVec out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            out.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '[' || c == ']') {
            flush();
            continue;
        }
        token.push_back(c);
    }
    flush();
    return out;
}

void print_warnings(const io::LoadNotes& notes) {
    for (const auto& w : notes.warnings) std::cerr << "[pcbf] warning: " << w << "\n";
}

struct CommonArgs {
    std::string out_dir;
    std::string format = "text";
    double tol = 1e-7;
    std::uint64_t seed = 0;
};

SynthOptions synth_options(const CommonArgs& common, double eps) {
    SynthOptions options;
    options.eps = eps;
    options.validation_tol = common.tol;
    return options;
}

void emit(const CommonArgs& common, const std::string& filename, const io::json& j) {
    if (common.out_dir.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        fs::create_directories(common.out_dir);
        io::write_json_file(fs::path(common.out_dir) / filename, j);
    }
}

void emit_text(const CommonArgs& common, const std::string& filename, const std::string& text) {
    if (common.out_dir.empty()) {
        std::cout << text;
    } else {
        fs::create_directories(common.out_dir);
        io::write_text_file(fs::path(common.out_dir) / filename, text);
    }
}

int run_check_pc(const std::string& graph_path, const CommonArgs& common) {
    LabeledGraph g = io::graph_from_json(io::load_json_file(graph_path));
    auto result = is_path_complete(g);
    io::json j{{"schema_version", 1},
               {"complete", result.complete},
               {"rejected_word", result.rejected}};
    if (common.format == "json") {
        emit(common, "check_pc.json", j);
    } else if (result.complete) {
        emit_text(common, "check_pc.txt", "path-complete\n");
    } else {
        emit_text(common, "check_pc.txt",
                  "not path-complete; shortest rejected word " + word_to_string(result.rejected) +
                      "\n");
    }
    return result.complete ? kOk : kViolated;
}

int run_compare(const std::string& g_path, const std::string& gbar_path, const CommonArgs& common) {
    LabeledGraph g = io::graph_from_json(io::load_json_file(g_path));
    LabeledGraph gbar = io::graph_from_json(io::load_json_file(gbar_path));
    CompareResult result = compare(g, gbar);

    auto map_json = [&](const std::optional<SimulationMap>& map, const LabeledGraph& from,
                        const LabeledGraph& to) -> io::json {
        if (!map) return nullptr;
        io::json entries = io::json::object();
        for (int v = 0; v < from.num_vertices(); ++v)
            entries[from.vertex_name(v)] = to.vertex_name((*map)(v));
        return entries;
    };

    std::string verdict;
    switch (result.verdict) {
        case Ordering::LessOrEqual: verdict = "less_or_equal"; break;
        case Ordering::GreaterOrEqual: verdict = "greater_or_equal"; break;
        case Ordering::Both: verdict = "both"; break;
        case Ordering::Incomparable: verdict = "incomparable"; break;
    }
    io::json j{{"schema_version", 1},
               {"verdict", verdict},
               {"g_simulates_gbar", map_json(result.g_simulates_gbar, gbar, g)},
               {"gbar_simulates_g", map_json(result.gbar_simulates_g, g, gbar)}};
    if (common.format == "json") {
        emit(common, "compare.json", j);
    } else {
        std::ostringstream text;
        text << "verdict: " << verdict << "\n";
        if (result.g_simulates_gbar) {
            text << "simulation of the second graph by the first:";
            for (int v = 0; v < gbar.num_vertices(); ++v)
                text << " " << gbar.vertex_name(v) << "->"
                     << g.vertex_name((*result.g_simulates_gbar)(v));
            text << "\n";
        }
        emit_text(common, "compare.txt", text.str());
    }
    bool ordered = result.verdict == Ordering::LessOrEqual || result.verdict == Ordering::Both;
    return ordered ? kOk : kViolated;
}

int run_counterexample(const std::string& graph_path, const CommonArgs& common) {
    LabeledGraph g = io::graph_from_json(io::load_json_file(graph_path));
    NecessityInstance inst = run_necessity_pipeline(g);

    CommonArgs dest = common;
    if (dest.out_dir.empty()) dest.out_dir = ".";
    emit(dest, "system.json", io::system_to_json(inst.system));
    emit(dest, "spec.json", io::spec_to_json(inst.spec));
    emit(dest, "witness.json", io::trajectory_to_json(inst.witness));

    // diagonal quadratic certificate from the coefficient vectors
    QuadraticCertificate cert;
    cert.eps = 1.0;  // B >= 3 on the unsafe set; any margin below that is sound
    for (const RatVec& p : inst.coefficients) {
        Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(inst.system.dimension, inst.system.dimension);
        double lambda = rat_to_double(p[0]);
        for (int i = 0; i < inst.system.dimension; ++i) {
            pm(i, i) = rat_to_double(p[i]);
            lambda = std::min(lambda, pm(i, i));
        }
        cert.P.push_back(pm);
        cert.lambda.push_back(lambda);
    }
    emit(dest, "certificate.json", io::certificate_to_json(cert, g));

    std::ostringstream report;
    report << "rejected word: " << word_to_string(inst.word) << "\n";
    report << "system dimension: " << inst.system.dimension << "\n";
    report << "witness: reaches the unsafe set at t = " << inst.word.size() << "\n\n";
    report << io::admissibility_report_to_text(inst.report, g);
    emit_text(dest, "report.txt", report.str());
    return kOk;
}

int run_separate(const std::string& graph_path, const CommonArgs& common) {
    LabeledGraph g = io::graph_from_json(io::load_json_file(graph_path));
    SeparationInstance inst = build_separating_instance(g);
    SeparationReport report = verify_separation(inst);

    CommonArgs dest = common;
    if (dest.out_dir.empty()) dest.out_dir = ".";
    emit(dest, "instance.json", io::separation_instance_to_json(inst));
    emit(dest, "report.json", io::separation_report_to_json(report, g));

    std::ostringstream text;
    text << "non-edges: " << inst.tilde_edges.size() << ", system dimension "
         << inst.system.dimension << "\n";
    text << (report.overall ? "all edge inequalities hold; every non-edge violated with gap 1/6\n"
                            : "CONSTRUCTION FAILED\n");
    emit_text(dest, "report.txt", text.str());
    return report.overall ? kOk : kViolated;
}

int run_synth(const std::string& system_path, const std::string& graph_path,
              const std::string& spec_path, const std::string& template_name, int degree,
              int mult_degree, double eps, const CommonArgs& common) {
    SwitchedSystem sys = io::system_from_json(io::load_json_file(system_path));
    LabeledGraph g = io::graph_from_json(io::load_json_file(graph_path));
    io::LoadNotes notes;
    SafetySpec spec = io::spec_from_json(io::load_json_file(spec_path), &notes);
    print_warnings(notes);

    SynthOptions options = synth_options(common, eps);
    io::json cert_json;
    ValidationReport report;
    if (template_name == "quadratic") {
        auto cert = synth_quadratic_pcbf(sys, g, spec, options);
        if (!cert) {
            std::cout << "infeasible\n";
            return kViolated;
        }
        report = validate_certificate(*cert, sys, g, spec, options);
        cert_json = io::certificate_to_json(*cert, g);
    } else if (template_name == "sos") {
        auto cert = synth_sos_pcbf(sys, g, spec, degree, mult_degree, options);
        if (!cert) {
            std::cout << "infeasible\n";
            return kViolated;
        }
        report = validate_certificate(*cert, sys, g, spec, options);
        cert_json = io::certificate_to_json(*cert, g);
    } else {
        throw CLI::ValidationError("--template must be quadratic or sos");
    }

    CommonArgs dest = common;
    if (dest.out_dir.empty()) dest.out_dir = ".";
    emit(dest, "certificate.json", cert_json);
    emit(dest, "validation.json", io::validation_report_to_json(report));
    emit_text(dest, "validation.txt", io::validation_report_to_text(report));
    std::cout << "feasible; certificate written ("
              << (report.pass ? "validation passed" : "validation FAILED") << ")\n";
    return report.pass ? kOk : kViolated;
}

int run_validate(const std::string& cert_path, const std::string& system_path,
                 const std::string& graph_path, const std::string& spec_path,
                 const CommonArgs& common) {
    SwitchedSystem sys = io::system_from_json(io::load_json_file(system_path));
    LabeledGraph g = io::graph_from_json(io::load_json_file(graph_path));
    io::LoadNotes notes;
    SafetySpec spec = io::spec_from_json(io::load_json_file(spec_path), &notes);
    print_warnings(notes);
    io::Certificate cert = io::certificate_from_json(io::load_json_file(cert_path), g);

    SynthOptions options = synth_options(common, 1e-6);
    ValidationReport report = std::visit(
        [&](const auto& c) { return validate_certificate(c, sys, g, spec, options); }, cert);
    if (common.format == "json")
        emit(common, "validation.json", io::validation_report_to_json(report));
    else
        emit_text(common, "validation.txt", io::validation_report_to_text(report));
    return report.pass ? kOk : kViolated;
}

int run_simulate(const std::string& system_path, const std::string& x0_text,
                 const std::string& word_text, const CommonArgs& common) {
    SwitchedSystem sys = io::system_from_json(io::load_json_file(system_path));
    Trajectory traj = simulate(sys, parse_vector(x0_text), parse_word(word_text));
    emit(common, "trajectory.json", io::trajectory_to_json(traj));
    return kOk;
}

int run_brute_force(const std::string& system_path, const std::string& spec_path, int horizon,
                    int grid, bool force, const CommonArgs& common) {
    SwitchedSystem sys = io::system_from_json(io::load_json_file(system_path));
    io::LoadNotes notes;
    SafetySpec spec = io::spec_from_json(io::load_json_file(spec_path), &notes);
    print_warnings(notes);

    BruteForceOptions options;
    options.grid_points_per_axis = grid;
    options.override_budget = force;
    auto witness = brute_force_unsafe(sys, spec, horizon, options);
    if (!witness) {
        emit_text(common, "brute_force.txt",
                  "no violation within horizon " + std::to_string(horizon) + "\n");
        return kOk;
    }
    emit(common, "witness.json", io::witness_to_json(*witness));
    std::cerr << "unsafe: word " << word_to_string(witness->word) << " at t = " << witness->t
              << "\n";
    return kViolated;
}

int run_experiment_cmd(const std::string& g_path, const std::string& gbar_path,
                       const std::string& spec_path, int count, int dim, int alphabet, int threads,
                       double eps, const CommonArgs& common) {
    LabeledGraph g = io::graph_from_json(io::load_json_file(g_path));
    LabeledGraph gbar = io::graph_from_json(io::load_json_file(gbar_path));
    SafetySpec spec = data::experiment_spec();
    if (!spec_path.empty()) {
        io::LoadNotes notes;
        spec = io::spec_from_json(io::load_json_file(spec_path), &notes);
        print_warnings(notes);
    }
    ExperimentConfig config(std::move(g), std::move(gbar), std::move(spec));
    config.count = count;
    config.dimension = dim;
    config.alphabet = alphabet;
    config.seed = common.seed;
    config.threads = threads;
    config.synth = synth_options(common, eps);
    ExperimentTally tally = run_experiment(config);

    ReportFormat format = report_format_from_string(common.format);
    std::string rendered = emit_report(tally, format);
    std::string filename = common.format == "json"   ? "experiment.json"
                           : common.format == "csv" ? "experiment.csv"
                                                    : "experiment.txt";
    emit_text(common, filename, rendered);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-complete barrier function toolkit for switched systems"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonArgs common;
    app.add_option("--seed", common.seed, "seed for randomized commands");
    app.add_option("--out", common.out_dir, "output directory (default: stdout)");
    app.add_option("--format", common.format, "report format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tol", common.tol, "validation tolerance on eigenvalue margins");

    std::string graph_path, gbar_path, system_path, spec_path, cert_path;
    std::string template_name = "quadratic", x0_text, word_text;
    int degree = 2, mult_degree = 2, horizon = 5, grid = 11, count = 300, dim = 3, alphabet = 2,
        threads = 0;
    double eps = 1e-6;
    bool force = false;

    auto* check_pc = app.add_subcommand("check-pc", "decide path-completeness of a graph");
    check_pc->add_option("graph", graph_path, "graph JSON file")->required();

    auto* cmp = app.add_subcommand("compare", "order two path-complete graphs via simulation");
    cmp->add_option("graph", graph_path, "graph JSON file (G)")->required();
    cmp->add_option("gbar", gbar_path, "graph JSON file (Gbar)")->required();

    auto* cex = app.add_subcommand(
        "counterexample", "build the unsafe system and admissible barrier of a non-complete graph");
    cex->add_option("graph", graph_path, "graph JSON file")->required();

    auto* sep = app.add_subcommand("separate",
                                   "build the edge/non-edge separating instance of a graph");
    sep->add_option("graph", graph_path, "graph JSON file")->required();

    auto* synth = app.add_subcommand("synth", "synthesize a barrier certificate");
    synth->add_option("system", system_path, "system JSON file")->required();
    synth->add_option("graph", graph_path, "graph JSON file")->required();
    synth->add_option("spec", spec_path, "safety specification JSON file")->required();
    synth->add_option("--template", template_name, "quadratic|sos")
        ->check(CLI::IsMember({"quadratic", "sos"}));
    synth->add_option("--degree", degree, "barrier polynomial degree (sos)");
    synth->add_option("--mult-degree", mult_degree, "multiplier degree (sos)");
    synth->add_option("--eps", eps, "strictness margin on the unsafe side");

    auto* val = app.add_subcommand("validate", "re-validate a certificate file");
    val->add_option("certificate", cert_path)->required();
    val->add_option("system", system_path)->required();
    val->add_option("graph", graph_path)->required();
    val->add_option("spec", spec_path)->required();

    auto* sim = app.add_subcommand("simulate", "exact trajectory under a switching word");
    sim->add_option("system", system_path)->required();
    sim->add_option("--x0", x0_text, "initial state, comma-separated rationals")->required();
    sim->add_option("--word", word_text, "switching word, e.g. 121")->required();

    auto* bf = app.add_subcommand("brute-force", "search words up to a horizon for a violation");
    bf->add_option("system", system_path)->required();
    bf->add_option("spec", spec_path)->required();
    bf->add_option("--horizon,-L", horizon, "maximum word length");
    bf->add_option("--grid", grid, "sample points per axis for polynomial modes");
    bf->add_flag("--force", force, "override the expansion budget guard");

    auto* exp = app.add_subcommand("experiment", "random-system feasibility comparison");
    exp->add_option("--graph", graph_path, "graph JSON file (G)")->required();
    exp->add_option("--gbar", gbar_path, "graph JSON file (Gbar)")->required();
    exp->add_option("--spec", spec_path, "safety spec JSON (default: balls 4 and 9)");
    exp->add_option("--count", count, "number of random systems");
    exp->add_option("--dim", dim, "state dimension");
    exp->add_option("--alphabet", alphabet, "number of modes");
    exp->add_option("--threads", threads, "worker threads (0 = all cores)");
    exp->add_option("--eps", eps, "strictness margin on the unsafe side");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check_pc) return run_check_pc(graph_path, common);
        if (*cmp) return run_compare(graph_path, gbar_path, common);
        if (*cex) return run_counterexample(graph_path, common);
        if (*sep) return run_separate(graph_path, common);
        if (*synth)
            return run_synth(system_path, graph_path, spec_path, template_name, degree, mult_degree,
                             eps, common);
        if (*val) return run_validate(cert_path, system_path, graph_path, spec_path, common);
        if (*sim) return run_simulate(system_path, x0_text, word_text, common);
        if (*bf) return run_brute_force(system_path, spec_path, horizon, grid, force, common);
        if (*exp)
            return run_experiment_cmd(graph_path, gbar_path, spec_path, count, dim, alphabet,
                                      threads, eps, common);
    } catch (const GraphIsPathCompleteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolated;
    } catch (const NonPathCompleteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolated;
    } catch (const EmptyTildeSetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolated;
    } catch (const SolverFailureError& e) {
        std::cerr << "backend failure: " << e.what() << "\n";
        return kBackend;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
