#pragma once

#include <optional>

#include "pcbf/graph.hpp"
#include "pcbf/sos.hpp"
#include "pcbf/system.hpp"

namespace pcbf {

struct SolverFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadratic barrier family B_v(x) = x^T P_v x - 1 with the unsafe-side
/// multipliers lambda_v and the strictness margin for the unsafe
/// condition.
struct QuadraticCertificate {
    std::vector<Eigen::MatrixXd> P;  // per node, symmetric
    std::vector<double> lambda;      // per node, nonnegative
    double eps = 1e-6;
};

/// Polynomial barrier family with the Gram factors of every
/// sum-of-squares constraint, sufficient to re-verify each identity.
struct SosCertificate {
    enum class Kind { Initial, Unsafe, Decrease };

    struct ConstraintData {
        Kind kind = Kind::Initial;
        int node = -1;  // Initial/Unsafe rows
        Edge edge;      // Decrease rows
        sos::GramBlock main;
        std::vector<sos::GramBlock> multipliers;  // aligned with the region inequality list
    };

    int dimension = 0;
    int degree = 2;
    int multiplier_degree = 2;
    double eps = 1e-6;
    std::vector<PolyD> barriers;  // per node, B_v
    std::vector<ConstraintData> constraints;
};

struct ValidationReport {
    struct Row {
        std::string condition;  // "initial" | "unsafe" | "decrease" | "identity" | "gram"
        std::string where;
        bool pass = true;
        double margin = 0.0;  // smallest eigenvalue / slack; negative means violated
        std::vector<double> witness;
        std::string detail;
    };
    std::vector<Row> rows;
    bool pass = true;

    void add(Row row) {
        pass = pass && row.pass;
        rows.push_back(std::move(row));
    }
};

struct SynthOptions {
    double eps = 1e-6;
    double validation_tol = 1e-7;
    double grid_tol = 1e-6;
    int grid_points = 21;
    conic::SolverOptions solver;
};

/// S-procedure LMI synthesis for linear modes over ball specifications.
/// Feasibility is decided by the conic backend; a certificate is
/// returned only after validation passes. A non-path-complete graph is
/// allowed (with a warning) so invalid-certificate demonstrations can
/// be driven through the same entry point.
std::optional<QuadraticCertificate> synth_quadratic_pcbf(const SwitchedSystem& sys,
                                                         const LabeledGraph& g,
                                                         const SafetySpec& spec,
                                                         const SynthOptions& options = {});

/// Fixed-degree sum-of-squares synthesis for polynomial modes over
/// semialgebraic specifications. degree must be even.
std::optional<SosCertificate> synth_sos_pcbf(const SwitchedSystem& sys, const LabeledGraph& g,
                                             const SafetySpec& spec, int degree,
                                             int multiplier_degree,
                                             const SynthOptions& options = {});

ValidationReport validate_certificate(const QuadraticCertificate& cert, const SwitchedSystem& sys,
                                      const LabeledGraph& g, const SafetySpec& spec,
                                      const SynthOptions& options = {});

ValidationReport validate_certificate(const SosCertificate& cert, const SwitchedSystem& sys,
                                      const LabeledGraph& g, const SafetySpec& spec,
                                      const SynthOptions& options = {});

/// Assigns node vbar of gbar the function of node R(vbar). The map is
/// re-verified; transported certificates validate on gbar whenever the
/// source validated on g.
QuadraticCertificate transport_certificate(const QuadraticCertificate& cert, const LabeledGraph& g,
                                           const LabeledGraph& gbar, const SimulationMap& map);

SosCertificate transport_certificate(const SosCertificate& cert, const LabeledGraph& g,
                                     const LabeledGraph& gbar, const SimulationMap& map);

}  // namespace pcbf
