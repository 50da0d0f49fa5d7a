#include "pcbf/synthesis.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <sstream>

namespace pcbf {

namespace {

std::string node_label(const LabeledGraph& g, int v) { return g.vertex_name(v); }

std::string edge_label(const LabeledGraph& g, const Edge& e) {
    return "(" + g.vertex_name(e.from) + "," + std::to_string(e.symbol) + "," + g.vertex_name(e.to) + ")";
}

/// min eigenvalue and its eigenvector
std::pair<double, Eigen::VectorXd> min_eig(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    return {eig.eigenvalues()[0], eig.eigenvectors().col(0)};
}

void warn_if_not_path_complete(const LabeledGraph& g) {
    auto pc = is_path_complete(g);
    if (!pc.complete)
        std::cerr << "[pcbf] warning: graph is not path-complete (rejects "
                  << word_to_string(pc.rejected)
                  << "); a returned certificate carries no safety guarantee\n";
}

struct BallSpecShape {
    double r0;
    double ru;
};

BallSpecShape require_ball_spec(const SafetySpec& spec) {
    const auto* b0 = std::get_if<Ball>(&spec.X0);
    const auto* bu = std::get_if<BallComplement>(&spec.Xu);
    if (!b0 || !bu || !std::holds_alternative<FullSpace>(spec.X))
        throw SpecShapeError(
            "quadratic synthesis expects X0 = ball, Xu = ball complement, X = full space");
    return {rat_to_double(b0->r2), rat_to_double(bu->r2)};
}

Eigen::MatrixXd block_as_matrix(const conic::Problem& prob, const std::vector<double>& x, int block,
                                int size) {
    Eigen::MatrixXd m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = x[prob.block_var(block, i, j)];
    return m;
}

int poly_degree(const std::vector<PolyD>& polys) {
    int d = 0;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

std::vector<std::vector<double>> grid_over(const Box& box, int points_per_axis) {
    int n = static_cast<int>(box.lower.size());
    std::vector<std::vector<double>> points;
    std::vector<int> index(n, 0);
    while (true) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) {
            double lo = *box.lower[i], hi = *box.upper[i];
            x[i] = points_per_axis == 1 ? lo : lo + (hi - lo) * index[i] / (points_per_axis - 1);
        }
        points.push_back(std::move(x));
        int axis = 0;
        while (axis < n && ++index[axis] == points_per_axis) index[axis++] = 0;
        if (axis == n) break;
    }
    return points;
}

/// Grid window for a region: its own box when bounded, otherwise the
/// fallback box inflated around its center.
std::optional<Box> grid_window(const Region& region, int dimension, const std::optional<Box>& fallback) {
    auto own = region_box(region, dimension);
    if (own && own->bounded()) return own;
    if (!fallback || !fallback->bounded()) return std::nullopt;
    Box window = *fallback;
    for (int i = 0; i < dimension; ++i) {
        double lo = *window.lower[i], hi = *window.upper[i];
        double center = (lo + hi) / 2, radius = (hi - lo) / 2;
        double span = 4.0 * std::max(radius, 1.0);
        window.lower[i] = center - span;
        window.upper[i] = center + span;
    }
    return window;
}

int grid_points_for_dimension(int requested, int dimension) {
    // keep the total point count at desk scale
    double total = std::pow(static_cast<double>(requested), dimension);
    int points = requested;
    while (points > 3 && total > 2e5) {
        --points;
        total = std::pow(static_cast<double>(points), dimension);
    }
    return points;
}

double eval_poly(const PolyD& p, const std::vector<double>& x) { return p.evaluate(x); }

}  // namespace

// ---------------------------------------------------------------------------
// quadratic path
// ---------------------------------------------------------------------------

std::optional<QuadraticCertificate> synth_quadratic_pcbf(const SwitchedSystem& sys,
                                                         const LabeledGraph& g,
                                                         const SafetySpec& spec,
                                                         const SynthOptions& options) {
    if (!sys.all_linear())
        throw SpecShapeError("quadratic synthesis requires linear modes");
    BallSpecShape shape = require_ball_spec(spec);
    warn_if_not_path_complete(g);

    const int n = sys.dimension;
    const int nodes = g.num_vertices();
    conic::Problem prob;

    std::vector<int> lambda(nodes), pblk(nodes), s1blk(nodes), s2blk(nodes);
    for (int v = 0; v < nodes; ++v) lambda[v] = prob.add_scalar();
    for (int v = 0; v < nodes; ++v) {
        pblk[v] = prob.add_block(n);
        s1blk[v] = prob.add_block(n);
        s2blk[v] = prob.add_block(n);
    }
    std::vector<int> s3blk;
    for (std::size_t e = 0; e < g.edges().size(); ++e) s3blk.push_back(prob.add_block(n));

    for (int v = 0; v < nodes; ++v) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                // S1 = (1/r0) I - P  >= 0
                prob.add_constraint({{prob.block_var(s1blk[v], i, j), 1.0},
                                     {prob.block_var(pblk[v], i, j), 1.0}},
                                    conic::Problem::Relation::Eq, i == j ? 1.0 / shape.r0 : 0.0);
                // S2 = P - lambda I >= 0
                std::vector<conic::Problem::Term> terms{{prob.block_var(s2blk[v], i, j), 1.0},
                                                        {prob.block_var(pblk[v], i, j), -1.0}};
                if (i == j) terms.push_back({lambda[v], 1.0});
                prob.add_constraint(std::move(terms), conic::Problem::Relation::Eq, 0.0);
            }
        // lambda * ru >= 1 + eps
        prob.add_constraint({{lambda[v], shape.ru}}, conic::Problem::Relation::Ge, 1.0 + options.eps);
        prob.add_trace_objective(pblk[v]);
    }

    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        Eigen::MatrixXd a = sys.mode_matrix(e.symbol).to_double();
        // S3 = P_v - A^T P_{v'} A >= 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                std::vector<conic::Problem::Term> terms{{prob.block_var(s3blk[ei], i, j), 1.0},
                                                        {prob.block_var(pblk[e.from], i, j), -1.0}};
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l <= k; ++l) {
                        double coef = a(k, i) * a(l, j);
                        if (k != l) coef += a(l, i) * a(k, j);
                        if (coef != 0.0)
                            terms.push_back({prob.block_var(pblk[e.to], k, l), coef});
                    }
                prob.add_constraint(std::move(terms), conic::Problem::Relation::Eq, 0.0);
            }
    }

    conic::SolveResult result = conic::solve(prob, options.solver);
    if (result.status == conic::SolveStatus::Infeasible) return std::nullopt;
    if (result.status != conic::SolveStatus::Feasible && result.status != conic::SolveStatus::Marginal)
        throw SolverFailureError("quadratic synthesis backend: " + result.message);

    QuadraticCertificate cert;
    cert.eps = options.eps;
    for (int v = 0; v < nodes; ++v) {
        cert.P.push_back(block_as_matrix(prob, result.x, pblk[v], n));
        cert.lambda.push_back(result.x[lambda[v]]);
    }
    ValidationReport report = validate_certificate(cert, sys, g, spec, options);
    if (!report.pass) {
        if (result.status == conic::SolveStatus::Marginal)
            throw SolverFailureError("marginal conic solution failed validation");
        throw SolverFailureError("solver-feasible point failed validation");
    }
    return cert;
}

ValidationReport validate_certificate(const QuadraticCertificate& cert, const SwitchedSystem& sys,
                                      const LabeledGraph& g, const SafetySpec& spec,
                                      const SynthOptions& options) {
    ValidationReport report;
    const double tol = options.validation_tol;
    BallSpecShape shape{0, 0};
    try {
        shape = require_ball_spec(spec);
    } catch (const SpecShapeError& err) {
        report.add({"shape", "spec", false, 0.0, {}, err.what()});
        return report;
    }
    if (static_cast<int>(cert.P.size()) != g.num_vertices() ||
        static_cast<int>(cert.lambda.size()) != g.num_vertices()) {
        report.add({"shape", "certificate", false, 0.0, {}, "one (P, lambda) pair per node required"});
        return report;
    }
    const int n = sys.dimension;
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (cert.P[v].rows() != n || cert.P[v].cols() != n) {
            report.add({"shape", node_label(g, v), false, 0.0, {}, "P dimension mismatch"});
            return report;
        }
        auto [m1, w1] = min_eig(id / shape.r0 - cert.P[v]);
        ValidationReport::Row row1{"initial", node_label(g, v), m1 >= -tol, m1, {}, ""};
        if (!row1.pass) row1.witness.assign(w1.data(), w1.data() + n);
        report.add(std::move(row1));

        auto [m2, w2] = min_eig(cert.P[v] - cert.lambda[v] * id);
        ValidationReport::Row row2{"unsafe", node_label(g, v), m2 >= -tol, m2, {}, ""};
        if (!row2.pass) row2.witness.assign(w2.data(), w2.data() + n);
        report.add(std::move(row2));

        double slack = cert.lambda[v] * shape.ru - (1.0 + cert.eps);
        report.add({"unsafe", node_label(g, v) + " multiplier", slack >= -tol, slack, {},
                    "lambda * ru >= 1 + eps"});
    }
    for (const Edge& e : g.edges()) {
        Eigen::MatrixXd a = sys.mode_matrix(e.symbol).to_double();
        auto [m3, w3] = min_eig(cert.P[e.from] - a.transpose() * cert.P[e.to] * a);
        ValidationReport::Row row{"decrease", edge_label(g, e), m3 >= -tol, m3, {}, ""};
        if (!row.pass) row.witness.assign(w3.data(), w3.data() + n);
        report.add(std::move(row));
    }
    return report;
}

QuadraticCertificate transport_certificate(const QuadraticCertificate& cert, const LabeledGraph& g,
                                           const LabeledGraph& gbar, const SimulationMap& map) {
    if (!check_simulation(g, gbar, map))
        throw std::invalid_argument("transport_certificate: map is not a verified simulation");
    QuadraticCertificate out;
    out.eps = cert.eps;
    for (int vbar = 0; vbar < gbar.num_vertices(); ++vbar) {
        out.P.push_back(cert.P.at(map(vbar)));
        out.lambda.push_back(cert.lambda.at(map(vbar)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// sum-of-squares path
// ---------------------------------------------------------------------------

namespace {

struct SosEncoding {
    std::vector<std::vector<int>> barrier_basis;
    std::vector<std::vector<int>> barrier_vars;  // [node][basis index]
    struct ConstraintBlocks {
        SosCertificate::Kind kind;
        int node = -1;
        Edge edge;
        int main_block;
        std::vector<std::vector<int>> main_basis;
        std::vector<int> mult_blocks;
        std::vector<std::vector<std::vector<int>>> mult_bases;
    };
    std::vector<ConstraintBlocks> constraints;
};

/// B as an affine polynomial: sum of var * monomial.
void accumulate_barrier(sos::AffinePoly& target, const std::vector<std::vector<int>>& basis,
                        const std::vector<int>& vars, double scale, int num_vars) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        PolyD mono(num_vars);
        mono.add_term(basis[i], 1.0);
        sos::accumulate_scaled_var(target, mono, vars[i], scale);
    }
}

/// B composed with the mode map, coefficients staying affine in the
/// barrier variables.
void accumulate_barrier_composed(sos::AffinePoly& target, const std::vector<std::vector<int>>& basis,
                                 const std::vector<int>& vars, const std::vector<PolyD>& mode,
                                 double scale, int num_vars) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        PolyD composed = PolyD::constant(num_vars, 1.0);
        for (int v = 0; v < num_vars; ++v)
            for (int rep = 0; rep < basis[i][v]; ++rep) composed = composed * mode[v];
        sos::accumulate_scaled_var(target, composed, vars[i], scale);
    }
}

std::vector<PolyD> mode_polys(const SwitchedSystem& sys, int symbol) {
    std::vector<PolyD> out;
    for (const Poly& p : sys.mode_as_polynomials(symbol)) out.push_back(to_double(p));
    return out;
}

}  // namespace

std::optional<SosCertificate> synth_sos_pcbf(const SwitchedSystem& sys, const LabeledGraph& g,
                                             const SafetySpec& spec, int degree,
                                             int multiplier_degree, const SynthOptions& options) {
    if (degree < 0 || degree % 2 != 0)
        throw std::invalid_argument("synth_sos_pcbf: barrier degree must be even");
    if (multiplier_degree < 0 || multiplier_degree % 2 != 0)
        throw std::invalid_argument("synth_sos_pcbf: multiplier degree must be even");
    warn_if_not_path_complete(g);

    const int n = sys.dimension;
    const int nodes = g.num_vertices();
    auto gs_init = sos::region_polynomials(spec.X0, n);
    auto gs_unsafe = sos::region_polynomials(spec.Xu, n);
    auto gs_state = sos::region_polynomials(spec.X, n);

    int mode_deg = 1;
    for (int s = 1; s <= sys.alphabet.m; ++s)
        for (const Poly& p : sys.mode_as_polynomials(s)) mode_deg = std::max(mode_deg, p.degree());

    conic::Problem prob;
    SosEncoding enc;
    enc.barrier_basis = sos::monomials_up_to(n, degree);
    for (int v = 0; v < nodes; ++v) {
        std::vector<int> vars;
        for (std::size_t i = 0; i < enc.barrier_basis.size(); ++i) vars.push_back(prob.add_scalar());
        enc.barrier_vars.push_back(std::move(vars));
    }

    auto mult_basis = sos::monomials_up_to(n, multiplier_degree / 2);

    auto add_sos_constraint = [&](sos::AffinePoly target, const std::vector<PolyD>& region_polys,
                                  SosCertificate::Kind kind, int node, const Edge* edge,
                                  int target_degree) {
        SosEncoding::ConstraintBlocks blocks;
        blocks.kind = kind;
        blocks.node = node;
        if (edge) blocks.edge = *edge;

        int deg = std::max(target_degree, multiplier_degree + poly_degree(region_polys));
        blocks.main_basis = sos::monomials_up_to(n, (deg + 1) / 2);
        blocks.main_block = prob.add_block(static_cast<int>(blocks.main_basis.size()));
        sos::accumulate_gram(target, prob, blocks.main_block, blocks.main_basis,
                             PolyD::constant(n, 1.0), -1.0);
        for (const PolyD& gpoly : region_polys) {
            int mb = prob.add_block(static_cast<int>(mult_basis.size()));
            blocks.mult_blocks.push_back(mb);
            blocks.mult_bases.push_back(mult_basis);
            sos::accumulate_gram(target, prob, mb, mult_basis, gpoly, -1.0);
            prob.add_trace_objective(mb);
        }
        prob.add_trace_objective(blocks.main_block);
        sos::emit_identity(prob, target);
        enc.constraints.push_back(std::move(blocks));
    };

    for (int v = 0; v < nodes; ++v) {
        // -B_v - sum s_i g_i^{X0} is SOS
        sos::AffinePoly init;
        accumulate_barrier(init, enc.barrier_basis, enc.barrier_vars[v], -1.0, n);
        add_sos_constraint(std::move(init), gs_init, SosCertificate::Kind::Initial, v, nullptr, degree);

        // B_v - eps - sum t_i h_i^{Xu} is SOS
        sos::AffinePoly unsafe;
        accumulate_barrier(unsafe, enc.barrier_basis, enc.barrier_vars[v], 1.0, n);
        PolyD eps_poly = PolyD::constant(n, options.eps);
        sos::accumulate(unsafe, eps_poly, -1.0);
        add_sos_constraint(std::move(unsafe), gs_unsafe, SosCertificate::Kind::Unsafe, v, nullptr,
                           degree);
    }
    for (const Edge& e : g.edges()) {
        // B_v - B_{v'} o f_sigma - sum u_i w_i^{X} is SOS
        sos::AffinePoly decrease;
        accumulate_barrier(decrease, enc.barrier_basis, enc.barrier_vars[e.from], 1.0, n);
        auto mode = mode_polys(sys, e.symbol);
        accumulate_barrier_composed(decrease, enc.barrier_basis, enc.barrier_vars[e.to], mode, -1.0, n);
        add_sos_constraint(std::move(decrease), gs_state, SosCertificate::Kind::Decrease, -1, &e,
                           degree * mode_deg);
    }

    conic::SolveResult result = conic::solve(prob, options.solver);
    if (result.status == conic::SolveStatus::Infeasible) return std::nullopt;
    if (result.status != conic::SolveStatus::Feasible && result.status != conic::SolveStatus::Marginal)
        throw SolverFailureError("sos synthesis backend: " + result.message);

    SosCertificate cert;
    cert.dimension = n;
    cert.degree = degree;
    cert.multiplier_degree = multiplier_degree;
    cert.eps = options.eps;
    for (int v = 0; v < nodes; ++v) {
        PolyD b(n);
        for (std::size_t i = 0; i < enc.barrier_basis.size(); ++i)
            b.add_term(enc.barrier_basis[i], result.x[enc.barrier_vars[v][i]]);
        cert.barriers.push_back(std::move(b));
    }
    for (const auto& blocks : enc.constraints) {
        SosCertificate::ConstraintData data;
        data.kind = blocks.kind;
        data.node = blocks.node;
        data.edge = blocks.edge;
        data.main.basis = blocks.main_basis;
        data.main.gram =
            block_as_matrix(prob, result.x, blocks.main_block, static_cast<int>(blocks.main_basis.size()));
        for (std::size_t i = 0; i < blocks.mult_blocks.size(); ++i) {
            sos::GramBlock mult;
            mult.basis = blocks.mult_bases[i];
            mult.gram = block_as_matrix(prob, result.x, blocks.mult_blocks[i],
                                        static_cast<int>(blocks.mult_bases[i].size()));
            data.multipliers.push_back(std::move(mult));
        }
        cert.constraints.push_back(std::move(data));
    }

    ValidationReport report = validate_certificate(cert, sys, g, spec, options);
    if (!report.pass) {
        if (result.status == conic::SolveStatus::Marginal)
            throw SolverFailureError("marginal conic solution failed validation");
        throw SolverFailureError("solver-feasible point failed validation");
    }
    return cert;
}

ValidationReport validate_certificate(const SosCertificate& cert, const SwitchedSystem& sys,
                                      const LabeledGraph& g, const SafetySpec& spec,
                                      const SynthOptions& options) {
    ValidationReport report;
    const int n = sys.dimension;
    const double tol = options.validation_tol;

    if (static_cast<int>(cert.barriers.size()) != g.num_vertices()) {
        report.add({"shape", "certificate", false, 0.0, {}, "one barrier per node required"});
        return report;
    }

    auto gs_init = sos::region_polynomials(spec.X0, n);
    auto gs_unsafe = sos::region_polynomials(spec.Xu, n);
    auto gs_state = sos::region_polynomials(spec.X, n);

    // coverage: every node needs initial+unsafe rows, every edge a decrease row
    std::vector<int> init_seen(g.num_vertices(), 0), unsafe_seen(g.num_vertices(), 0);
    std::vector<int> edge_seen(g.edges().size(), 0);

    for (const auto& data : cert.constraints) {
        std::string where;
        const std::vector<PolyD>* region = nullptr;
        PolyD target(n);
        switch (data.kind) {
            case SosCertificate::Kind::Initial: {
                where = "initial " + node_label(g, data.node);
                region = &gs_init;
                target = -cert.barriers.at(data.node);
                init_seen.at(data.node) = 1;
                break;
            }
            case SosCertificate::Kind::Unsafe: {
                where = "unsafe " + node_label(g, data.node);
                region = &gs_unsafe;
                target = cert.barriers.at(data.node);
                target.add_term(std::vector<int>(n, 0), -cert.eps);
                unsafe_seen.at(data.node) = 1;
                break;
            }
            case SosCertificate::Kind::Decrease: {
                where = "decrease " + edge_label(g, data.edge);
                region = &gs_state;
                bool found = false;
                for (std::size_t i = 0; i < g.edges().size(); ++i)
                    if (g.edges()[i] == data.edge) {
                        edge_seen[i] = 1;
                        found = true;
                    }
                if (!found) {
                    report.add({"decrease", where, false, 0.0, {}, "edge not present in the graph"});
                    continue;
                }
                target = cert.barriers.at(data.edge.from);
                auto mode = mode_polys(sys, data.edge.symbol);
                std::vector<PolyD> subs;
                for (const PolyD& coord : mode) subs.push_back(coord);
                target = target - cert.barriers.at(data.edge.to).compose(subs);
                break;
            }
        }

        // identity residual: target - main - sum mult_i * g_i == 0
        PolyD residual = target - data.main.expand(n);
        if (data.multipliers.size() != region->size()) {
            report.add({"identity", where, false, 0.0, {}, "multiplier count mismatch"});
            continue;
        }
        for (std::size_t i = 0; i < region->size(); ++i)
            residual = residual - data.multipliers[i].expand(n) * (*region)[i];
        double res = max_abs_coefficient(residual);
        report.add({"identity", where, res <= tol, res, {}, "max abs coefficient of the residual"});

        auto [mmin, mvec] = min_eig(data.main.gram);
        report.add({"gram", where, mmin >= -tol, mmin, {}, "main factor"});
        for (std::size_t i = 0; i < data.multipliers.size(); ++i) {
            auto [mm, mv] = min_eig(data.multipliers[i].gram);
            report.add({"gram", where + " multiplier " + std::to_string(i), mm >= -tol, mm, {}, ""});
        }
    }

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!init_seen[v])
            report.add({"initial", node_label(g, v), false, 0.0, {}, "no constraint data"});
        if (!unsafe_seen[v])
            report.add({"unsafe", node_label(g, v), false, 0.0, {}, "no constraint data"});
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (!edge_seen[i])
            report.add({"decrease", edge_label(g, g.edges()[i]), false, 0.0, {}, "no constraint data"});

    // grid corroboration of the three conditions
    const double gtol = options.grid_tol;
    auto x_box = grid_window(spec.X, n, region_box(spec.X0, n));
    auto x0_box = grid_window(spec.X0, n, x_box);
    auto xu_box = grid_window(spec.Xu, n, x_box);
    int points = grid_points_for_dimension(options.grid_points, n);

    if (x0_box && x0_box->bounded()) {
        double worst = 0.0;
        std::vector<double> witness;
        for (const auto& x : grid_over(*x0_box, points)) {
            if (!in_region(spec.X0, x)) continue;
            for (int v = 0; v < g.num_vertices(); ++v) {
                double val = eval_poly(cert.barriers[v], x);
                if (val > worst) {
                    worst = val;
                    witness = x;
                }
            }
        }
        report.add({"initial", "grid", worst <= gtol, worst, witness, "max B over sampled X0"});
    }
    if (xu_box && xu_box->bounded()) {
        double worst = 0.0;
        std::vector<double> witness;
        for (const auto& x : grid_over(*xu_box, points)) {
            if (!in_region(spec.Xu, x)) continue;
            for (int v = 0; v < g.num_vertices(); ++v) {
                double val = eval_poly(cert.barriers[v], x);
                if (-val > worst) {
                    worst = -val;
                    witness = x;
                }
            }
        }
        report.add({"unsafe", "grid", worst <= gtol, worst, witness, "max -B over sampled Xu"});
    }
    if (x_box && x_box->bounded()) {
        double worst = 0.0;
        std::vector<double> witness;
        for (const auto& x : grid_over(*x_box, points)) {
            if (!in_region(spec.X, x)) continue;
            for (const Edge& e : g.edges()) {
                auto image = simulate_numeric(sys, x, {e.symbol}).final_state();
                double val = eval_poly(cert.barriers[e.to], image) - eval_poly(cert.barriers[e.from], x);
                if (val > worst) {
                    worst = val;
                    witness = x;
                }
            }
        }
        report.add({"decrease", "grid", worst <= gtol, worst, witness,
                    "max increase of B along one step over sampled X"});
    }
    return report;
}

SosCertificate transport_certificate(const SosCertificate& cert, const LabeledGraph& g,
                                     const LabeledGraph& gbar, const SimulationMap& map) {
    if (!check_simulation(g, gbar, map))
        throw std::invalid_argument("transport_certificate: map is not a verified simulation");

    SosCertificate out;
    out.dimension = cert.dimension;
    out.degree = cert.degree;
    out.multiplier_degree = cert.multiplier_degree;
    out.eps = cert.eps;
    for (int vbar = 0; vbar < gbar.num_vertices(); ++vbar)
        out.barriers.push_back(cert.barriers.at(map(vbar)));

    auto find_node_data = [&](SosCertificate::Kind kind, int node) -> const SosCertificate::ConstraintData& {
        for (const auto& data : cert.constraints)
            if (data.kind == kind && data.node == node) return data;
        throw std::invalid_argument("transport_certificate: source certificate lacks node data");
    };
    auto find_edge_data = [&](const Edge& e) -> const SosCertificate::ConstraintData& {
        for (const auto& data : cert.constraints)
            if (data.kind == SosCertificate::Kind::Decrease && data.edge == e) return data;
        throw std::invalid_argument("transport_certificate: source certificate lacks edge data");
    };

    for (int vbar = 0; vbar < gbar.num_vertices(); ++vbar) {
        for (auto kind : {SosCertificate::Kind::Initial, SosCertificate::Kind::Unsafe}) {
            SosCertificate::ConstraintData data = find_node_data(kind, map(vbar));
            data.node = vbar;
            out.constraints.push_back(std::move(data));
        }
    }
    for (const Edge& ebar : gbar.edges()) {
        Edge image{map(ebar.from), ebar.symbol, map(ebar.to)};
        SosCertificate::ConstraintData data = find_edge_data(image);
        data.edge = ebar;
        out.constraints.push_back(std::move(data));
    }
    return out;
}

}  // namespace pcbf
