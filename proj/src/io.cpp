#include "pcbf/io.hpp"

#include <cstdio>
#include <fstream>

namespace pcbf::io {

namespace {

std::string double_to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return std::strtod(j.get<std::string>().c_str(), nullptr);
    throw std::invalid_argument("expected a number or numeric string");
}

void check_schema(const json& j) {
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version");
}

json gram_block_to_json(const sos::GramBlock& block) {
    json basis = json::array();
    for (const auto& e : block.basis) basis.push_back(e);
    json gram = json::array();
    for (Eigen::Index i = 0; i < block.gram.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < block.gram.cols(); ++j)
            row.push_back(double_to_string(block.gram(i, j)));
        gram.push_back(row);
    }
    return json{{"basis", basis}, {"gram", gram}};
}

sos::GramBlock gram_block_from_json(const json& j) {
    sos::GramBlock block;
    for (const auto& e : j.at("basis")) block.basis.push_back(e.get<std::vector<int>>());
    const auto& rows = j.at("gram");
    block.gram.resize(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows.size(); ++k)
            block.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                double_from_json(rows[i][k]);
    return block;
}

json polyd_to_json(const PolyD& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coef", double_to_string(c)}});
    return terms;
}

PolyD polyd_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("polynomial needs at least one term");
    int n = static_cast<int>(j[0].at("exp").size());
    PolyD p(n);
    for (const auto& term : j) p.add_term(term.at("exp").get<std::vector<int>>(), double_from_json(term.at("coef")));
    return p;
}

}  // namespace

Rat rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_number())
        throw std::invalid_argument(
            "non-integer JSON numbers are inexact; use decimal strings for coefficients");
    throw std::invalid_argument("expected a coefficient string or integer");
}

json rational_to_json(const Rat& r) { return rat_to_string(r); }

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coef", rat_to_string(c)}});
    return terms;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("polynomial needs at least one term");
    int n = static_cast<int>(j[0].at("exp").size());
    Poly p(n);
    for (const auto& term : j) p.add_term(term.at("exp").get<std::vector<int>>(), rational_from_json(term.at("coef")));
    return p;
}

json region_to_json(const Region& r) {
    if (std::holds_alternative<FullSpace>(r)) return json{{"type", "full"}};
    if (const auto* b = std::get_if<Ball>(&r))
        return json{{"type", "ball"}, {"r2", rat_to_string(b->r2)}};
    if (const auto* b = std::get_if<BallComplement>(&r))
        return json{{"type", "ball_complement"}, {"r2", rat_to_string(b->r2)}};
    const auto& sa = std::get<SemiAlgebraic>(r);
    json ineqs = json::array();
    for (const Poly& g : sa.ineqs) ineqs.push_back(poly_to_json(g));
    return json{{"type", "semialgebraic"}, {"ineqs", ineqs}};
}

Region region_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "full") return FullSpace{};
    if (type == "ball") {
        Rat r2 = rational_from_json(j.at("r2"));
        if (r2 <= 0) throw std::invalid_argument("ball radius must be positive");
        return Ball{r2};
    }
    if (type == "ball_complement") {
        Rat r2 = rational_from_json(j.at("r2"));
        if (r2 <= 0) throw std::invalid_argument("ball radius must be positive");
        return BallComplement{r2};
    }
    if (type == "semialgebraic") {
        SemiAlgebraic sa;
        for (const auto& g : j.at("ineqs")) sa.ineqs.push_back(poly_from_json(g));
        return sa;
    }
    throw std::invalid_argument("unknown region type '" + type + "'");
}

namespace {

int region_dimension(const Region& r) {
    if (const auto* sa = std::get_if<SemiAlgebraic>(&r))
        if (!sa->ineqs.empty()) return sa->ineqs[0].num_vars();
    return 0;
}

bool region_inhabited_by_sampling(const Region& r, const Region& window_hint, int dimension) {
    auto box = region_box(r, dimension);
    if (!box || !box->bounded()) box = region_box(window_hint, dimension);
    if (!box || !box->bounded()) return true;  // cannot refute
    std::vector<int> index(dimension, 0);
    const int per_axis = 11;
    while (true) {
        std::vector<double> x(dimension);
        for (int i = 0; i < dimension; ++i) {
            double lo = *box->lower[i], hi = *box->upper[i];
            x[i] = lo + (hi - lo) * index[i] / (per_axis - 1);
        }
        if (in_region(r, x)) return true;
        int axis = 0;
        while (axis < dimension && ++index[axis] == per_axis) index[axis++] = 0;
        if (axis == dimension) break;
    }
    return false;
}

}  // namespace

json spec_to_json(const SafetySpec& spec) {
    return json{{"schema_version", kSchemaVersion},
                {"X", region_to_json(spec.X)},
                {"X0", region_to_json(spec.X0)},
                {"Xu", region_to_json(spec.Xu)}};
}

SafetySpec spec_from_json(const json& j, LoadNotes* notes) {
    check_schema(j);
    SafetySpec spec;
    spec.X = j.contains("X") ? region_from_json(j.at("X")) : Region{FullSpace{}};
    spec.X0 = region_from_json(j.at("X0"));
    spec.Xu = region_from_json(j.at("Xu"));

    int dimension = std::max({region_dimension(spec.X), region_dimension(spec.X0),
                              region_dimension(spec.Xu), 1});
    if (check_disjoint(spec, dimension) != Disjointness::Overlapping) return spec;

    // One flipped inequality may resolve the overlap (a common sign
    // slip in hand-written specifications); anything else is an error.
    if (auto* sa = std::get_if<SemiAlgebraic>(&spec.Xu)) {
        for (std::size_t i = 0; i < sa->ineqs.size(); ++i) {
            SafetySpec candidate = spec;
            auto& flipped = std::get<SemiAlgebraic>(candidate.Xu);
            flipped.ineqs[i] = -flipped.ineqs[i];
            if (check_disjoint(candidate, dimension) == Disjointness::Overlapping) continue;
            if (!region_inhabited_by_sampling(candidate.Xu, candidate.X, dimension)) continue;
            if (notes)
                notes->warnings.push_back(
                    "Xu overlaps X0 as written; inequality " + std::to_string(i) +
                    " was sign-flipped to restore disjointness");
            return candidate;
        }
    }
    throw std::invalid_argument("X0 and Xu must be disjoint");
}

json system_to_json(const SwitchedSystem& sys) {
    json modes = json::object();
    for (int s = 1; s <= sys.alphabet.m; ++s) {
        const ModeDynamics& m = sys.mode(s);
        json entry;
        if (const auto* lin = std::get_if<LinearMode>(&m)) {
            json rows = json::array();
            for (std::size_t i = 0; i < lin->A.rows(); ++i) {
                json row = json::array();
                for (std::size_t k = 0; k < lin->A.cols(); ++k) row.push_back(rat_to_string(lin->A(i, k)));
                rows.push_back(row);
            }
            entry = json{{"type", "linear"}, {"A", rows}};
        } else {
            const auto& poly = std::get<PolyMode>(m);
            json coords = json::array();
            for (const Poly& p : poly.f) coords.push_back(poly_to_json(p));
            entry = json{{"type", "poly"}, {"f", coords}};
        }
        modes[std::to_string(s)] = entry;
    }
    return json{{"schema_version", kSchemaVersion},
                {"dimension", sys.dimension},
                {"alphabet", sys.alphabet.m},
                {"modes", modes}};
}

SwitchedSystem system_from_json(const json& j) {
    check_schema(j);
    int dimension = j.at("dimension").get<int>();
    Alphabet alphabet(j.at("alphabet").get<int>());
    std::vector<ModeDynamics> modes;
    for (int s = 1; s <= alphabet.m; ++s) {
        const json& entry = j.at("modes").at(std::to_string(s));
        const std::string type = entry.at("type").get<std::string>();
        if (type == "linear") {
            const auto& rows = entry.at("A");
            RatMat a(dimension, dimension);
            if (static_cast<int>(rows.size()) != dimension)
                throw std::invalid_argument("mode matrix row count mismatch");
            for (int i = 0; i < dimension; ++i) {
                if (static_cast<int>(rows[i].size()) != dimension)
                    throw std::invalid_argument("mode matrix column count mismatch");
                for (int k = 0; k < dimension; ++k) a(i, k) = rational_from_json(rows[i][k]);
            }
            modes.push_back(LinearMode{std::move(a)});
        } else if (type == "poly") {
            PolyMode mode;
            for (const auto& coord : entry.at("f")) mode.f.push_back(poly_from_json(coord));
            modes.push_back(std::move(mode));
        } else {
            throw std::invalid_argument("unknown mode type '" + type + "'");
        }
    }
    return SwitchedSystem(dimension, alphabet, std::move(modes));
}

json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back(json::array({g.vertex_name(e.from), e.symbol, g.vertex_name(e.to)}));
    return json{{"schema_version", kSchemaVersion},
                {"alphabet", g.alphabet().m},
                {"nodes", g.vertex_names()},
                {"edges", edges}};
}

LabeledGraph graph_from_json(const json& j) {
    check_schema(j);
    LabeledGraph g(Alphabet(j.at("alphabet").get<int>()),
                   j.at("nodes").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("edge entries are [from, symbol, to] triples");
        g.add_edge(g.vertex_index(e[0].get<std::string>()), e[1].get<int>(),
                   g.vertex_index(e[2].get<std::string>()));
    }
    return g;
}

json trajectory_to_json(const Trajectory& t) {
    json states = json::array();
    for (const RatVec& x : t.states) {
        json state = json::array();
        for (const Rat& v : x) state.push_back(rat_to_string(v));
        states.push_back(state);
    }
    return json{{"schema_version", kSchemaVersion}, {"word", t.word}, {"states", states}};
}

json witness_to_json(const UnsafeWitness& w) {
    json x0 = json::array();
    for (double v : w.x0) x0.push_back(double_to_string(v));
    return json{{"schema_version", kSchemaVersion}, {"word", w.word}, {"t", w.t}, {"x0", x0}};
}

json certificate_to_json(const QuadraticCertificate& cert, const LabeledGraph& g) {
    json nodes = json::object();
    for (int v = 0; v < g.num_vertices(); ++v) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < cert.P[v].rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < cert.P[v].cols(); ++k)
                row.push_back(double_to_string(cert.P[v](i, k)));
            rows.push_back(row);
        }
        nodes[g.vertex_name(v)] = json{{"P", rows}, {"lambda", double_to_string(cert.lambda[v])}};
    }
    return json{{"schema_version", kSchemaVersion},
                {"template", "quadratic"},
                {"eps", double_to_string(cert.eps)},
                {"nodes", nodes}};
}

json certificate_to_json(const SosCertificate& cert, const LabeledGraph& g) {
    json nodes = json::object();
    for (int v = 0; v < g.num_vertices(); ++v)
        nodes[g.vertex_name(v)] = json{{"B", polyd_to_json(cert.barriers[v])}};
    json constraints = json::array();
    for (const auto& data : cert.constraints) {
        json entry;
        switch (data.kind) {
            case SosCertificate::Kind::Initial:
                entry["kind"] = "initial";
                entry["node"] = g.vertex_name(data.node);
                break;
            case SosCertificate::Kind::Unsafe:
                entry["kind"] = "unsafe";
                entry["node"] = g.vertex_name(data.node);
                break;
            case SosCertificate::Kind::Decrease:
                entry["kind"] = "decrease";
                entry["edge"] = json::array({g.vertex_name(data.edge.from), data.edge.symbol,
                                             g.vertex_name(data.edge.to)});
                break;
        }
        entry["main"] = gram_block_to_json(data.main);
        json mults = json::array();
        for (const auto& m : data.multipliers) mults.push_back(gram_block_to_json(m));
        entry["multipliers"] = mults;
        constraints.push_back(std::move(entry));
    }
    return json{{"schema_version", kSchemaVersion},
                {"template", "sos"},
                {"dimension", cert.dimension},
                {"degree", cert.degree},
                {"multiplier_degree", cert.multiplier_degree},
                {"eps", double_to_string(cert.eps)},
                {"nodes", nodes},
                {"constraints", constraints}};
}

Certificate certificate_from_json(const json& j, const LabeledGraph& g) {
    check_schema(j);
    const std::string tmpl = j.at("template").get<std::string>();
    if (tmpl == "quadratic") {
        QuadraticCertificate cert;
        cert.eps = double_from_json(j.at("eps"));
        for (int v = 0; v < g.num_vertices(); ++v) {
            const json& entry = j.at("nodes").at(g.vertex_name(v));
            const auto& rows = entry.at("P");
            Eigen::MatrixXd p(rows.size(), rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t k = 0; k < rows.size(); ++k)
                    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                        double_from_json(rows[i][k]);
            cert.P.push_back(std::move(p));
            cert.lambda.push_back(double_from_json(entry.at("lambda")));
        }
        return cert;
    }
    if (tmpl == "sos") {
        SosCertificate cert;
        cert.dimension = j.at("dimension").get<int>();
        cert.degree = j.at("degree").get<int>();
        cert.multiplier_degree = j.at("multiplier_degree").get<int>();
        cert.eps = double_from_json(j.at("eps"));
        for (int v = 0; v < g.num_vertices(); ++v)
            cert.barriers.push_back(polyd_from_json(j.at("nodes").at(g.vertex_name(v)).at("B")));
        for (const auto& entry : j.at("constraints")) {
            SosCertificate::ConstraintData data;
            const std::string kind = entry.at("kind").get<std::string>();
            if (kind == "initial")
                data.kind = SosCertificate::Kind::Initial;
            else if (kind == "unsafe")
                data.kind = SosCertificate::Kind::Unsafe;
            else if (kind == "decrease")
                data.kind = SosCertificate::Kind::Decrease;
            else
                throw std::invalid_argument("unknown constraint kind '" + kind + "'");
            if (data.kind == SosCertificate::Kind::Decrease) {
                const auto& e = entry.at("edge");
                data.edge = Edge{g.vertex_index(e[0].get<std::string>()), e[1].get<int>(),
                                 g.vertex_index(e[2].get<std::string>())};
            } else {
                data.node = g.vertex_index(entry.at("node").get<std::string>());
            }
            data.main = gram_block_from_json(entry.at("main"));
            for (const auto& m : entry.at("multipliers")) data.multipliers.push_back(gram_block_from_json(m));
            cert.constraints.push_back(std::move(data));
        }
        return cert;
    }
    throw std::invalid_argument("unknown certificate template '" + tmpl + "'");
}

json validation_report_to_json(const ValidationReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json witness = json::array();
        for (double v : row.witness) witness.push_back(double_to_string(v));
        rows.push_back(json{{"condition", row.condition},
                            {"where", row.where},
                            {"pass", row.pass},
                            {"margin", row.margin},
                            {"witness", witness},
                            {"detail", row.detail}});
    }
    return json{{"schema_version", kSchemaVersion}, {"pass", report.pass}, {"rows", rows}};
}

std::string validation_report_to_text(const ValidationReport& report) {
    std::string out;
    for (const auto& row : report.rows) {
        out += row.pass ? "[pass] " : "[FAIL] ";
        out += row.condition + " " + row.where + "  margin=" + double_to_string(row.margin);
        if (!row.detail.empty()) out += "  (" + row.detail + ")";
        out += "\n";
    }
    out += report.pass ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

json admissibility_report_to_json(const AdmissibilityReport& report, const LabeledGraph& g) {
    json bounds = json::array();
    for (const auto& row : report.bounds)
        bounds.push_back(json{{"node", g.vertex_name(row.vertex)},
                              {"pass", row.pass},
                              {"violating_coord", row.violating_coord}});
    json edges = json::array();
    for (const auto& row : report.edge_rows) {
        json entry{{"edge", json::array({g.vertex_name(row.edge.from), row.edge.symbol,
                                         g.vertex_name(row.edge.to)})},
                   {"pass", row.pass}};
        if (!row.pass) {
            entry["violating_coord"] = row.violating_coord;
            entry["lhs"] = rat_to_string(row.lhs);
            entry["rhs"] = rat_to_string(row.rhs);
        }
        edges.push_back(std::move(entry));
    }
    return json{{"schema_version", kSchemaVersion},
                {"pass", report.overall},
                {"bounds", bounds},
                {"edges", edges}};
}

std::string admissibility_report_to_text(const AdmissibilityReport& report, const LabeledGraph& g) {
    std::string out;
    for (const auto& row : report.bounds) {
        out += row.pass ? "[pass] " : "[FAIL] ";
        out += "coefficient bounds at " + g.vertex_name(row.vertex) + "\n";
    }
    for (const auto& row : report.edge_rows) {
        out += row.pass ? "[pass] " : "[FAIL] ";
        out += "edge (" + g.vertex_name(row.edge.from) + "," + std::to_string(row.edge.symbol) + "," +
               g.vertex_name(row.edge.to) + ")";
        if (!row.pass)
            out += "  coordinate " + std::to_string(row.violating_coord) + ": " + rat_to_string(row.lhs) +
                   " > " + rat_to_string(row.rhs);
        out += "\n";
    }
    out += report.overall ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

json separation_report_to_json(const SeparationReport& report, const LabeledGraph& g) {
    json edges = json::array();
    for (const auto& row : report.edge_rows)
        edges.push_back(json{{"edge", json::array({g.vertex_name(row.edge.from), row.edge.symbol,
                                                   g.vertex_name(row.edge.to)})},
                             {"tilde", row.tilde},
                             {"pass", row.pass},
                             {"lhs", rat_to_string(row.lhs)},
                             {"rhs", rat_to_string(row.rhs)}});
    json non_edges = json::array();
    for (const auto& row : report.non_edge_rows) {
        json witness = json::array();
        for (const Rat& v : row.witness) witness.push_back(rat_to_string(v));
        non_edges.push_back(json{{"non_edge", json::array({g.vertex_name(row.non_edge.from),
                                                           row.non_edge.symbol,
                                                           g.vertex_name(row.non_edge.to)})},
                                 {"tilde", row.tilde},
                                 {"pass", row.pass},
                                 {"gap", rat_to_string(row.gap)},
                                 {"witness", witness}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"pass", report.overall},
                {"edges", edges},
                {"non_edges", non_edges}};
}

json separation_instance_to_json(const SeparationInstance& inst) {
    json tilde = json::array();
    for (const Edge& e : inst.tilde_edges)
        tilde.push_back(json::array({inst.graph.vertex_name(e.from), e.symbol,
                                     inst.graph.vertex_name(e.to)}));
    json q = json::object();
    for (int v = 0; v < inst.graph.num_vertices(); ++v) {
        json row = json::array();
        for (const Rat& value : inst.qcoeffs[v]) row.push_back(rat_to_string(value));
        q[inst.graph.vertex_name(v)] = row;
    }
    return json{{"schema_version", kSchemaVersion},
                {"graph", graph_to_json(inst.graph)},
                {"tilde_edges", tilde},
                {"system", system_to_json(inst.system)},
                {"spec", spec_to_json(inst.spec)},
                {"qcoeffs", q}};
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace pcbf::io
