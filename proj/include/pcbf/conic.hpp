#pragma once

#include <string>
#include <vector>

namespace pcbf::conic {

/// Backend-agnostic semidefinite feasibility problem in one standard
/// form: free scalar variables, symmetric matrix variables constrained
/// to the PSD cone, linear equality/inequality constraints over the
/// variable entries, and an optional linear objective (used here as a
/// trace regularizer). Affine matrix inequalities are modeled by the
/// caller with slack matrix variables plus equalities.
class Problem {
public:
    enum class Relation { Eq, Ge };

    struct Term {
        int var;
        double coef;
    };

    struct Constraint {
        std::vector<Term> terms;
        Relation rel = Relation::Eq;
        double rhs = 0.0;
    };

    struct Block {
        int size;
        int base;  // index of entry (0, 0)
    };

    int add_scalar() { return next_var_++; }

    int add_block(int size) {
        blocks_.push_back({size, next_var_});
        next_var_ += size * (size + 1) / 2;
        return static_cast<int>(blocks_.size()) - 1;
    }

    const std::vector<Block>& blocks() const { return blocks_; }

    /// Entry (i, j), i >= j, of a matrix block; entries are shared with
    /// the transposed position.
    int block_var(int block, int i, int j) const {
        if (j > i) std::swap(i, j);
        return blocks_[block].base + i * (i + 1) / 2 + j;
    }

    int num_vars() const { return next_var_; }

    void add_constraint(std::vector<Term> terms, Relation rel, double rhs) {
        constraints_.push_back({std::move(terms), rel, rhs});
    }

    const std::vector<Constraint>& constraints() const { return constraints_; }

    void add_objective_term(int var, double coef) { objective_.push_back({var, coef}); }

    void add_trace_objective(int block, double weight = 1.0) {
        for (int i = 0; i < blocks_[block].size; ++i) add_objective_term(block_var(block, i, i), weight);
    }

    const std::vector<Term>& objective() const { return objective_; }

private:
    int next_var_ = 0;
    std::vector<Block> blocks_;
    std::vector<Constraint> constraints_;
    std::vector<Term> objective_;
};

enum class SolveStatus {
    Feasible,    // strictly feasible point found and centered on the objective
    Marginal,    // best point has |margin| below tolerance; caller decides by validation
    Infeasible,  // certified: the phase-I infimum is bounded away from zero
    Unknown,     // undecided within iteration budget
    Failure,     // numerical breakdown
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::vector<double> x;
    /// Final phase-I margin t (all blocks satisfy B + tI >= 0);
    /// negative means strictly feasible with margin -t.
    double margin = 0.0;
    double objective = 0.0;
    int newton_steps = 0;
    std::string message;
};

struct SolverOptions {
    double feasible_margin = 1e-7;  // stop phase I once t <= -feasible_margin
    double infeasible_tol = 1e-9;   // declare infeasible when the certified bound exceeds this
    double marginal_tol = 1e-7;
    int max_newton_steps = 2000;
    double objective_gap = 1e-9;  // relative target for the regularizer phase
};

SolveResult solve(const Problem& problem, const SolverOptions& options = {});

}  // namespace pcbf::conic
