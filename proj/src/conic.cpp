#include "pcbf/conic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace pcbf::conic {

namespace {

struct BlockInfo {
    int size;
    int base;  // first variable index of the block's lower triangle
};

/// Shared state for the barrier iterations. Phase I appends one extra
/// variable t added to every block diagonal and every inequality slack.
class Solver {
public:
    Solver(const Problem& problem, const SolverOptions& options)
        : p_(problem), opts_(options), n_(problem.num_vars()) {
        for (const auto& b : p_.blocks()) {
            blocks_.push_back({b.size, b.base});
            nu_ += b.size;
        }
        for (const auto& c : p_.constraints()) {
            if (c.rel == Problem::Relation::Eq)
                eqs_.push_back(&c);
            else
                ineqs_.push_back(&c);
        }
        nu_ += static_cast<double>(ineqs_.size());
        nu_ = std::max(nu_, 1.0);
        build_equalities();
    }

    SolveResult run() {
        SolveResult result;
        Eigen::VectorXd x;
        if (!initial_point(x, result)) return result;

        // ---- phase I: drive the uniform margin t below zero ----
        double t0 = 1.0;
        for (const auto& b : blocks_) {
            Eigen::MatrixXd mat = block_matrix(x, b, 0.0);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mat);
            t0 = std::max(t0, -eig.eigenvalues().minCoeff() + 1.0);
        }
        for (const auto* c : ineqs_) t0 = std::max(t0, c->rhs - row_value(*c, x) + 1.0);

        Eigen::VectorXd z(n_ + 1);
        z.head(n_) = x;
        z[n_] = t0;

        double mu = std::max(1.0, t0);
        const double mu_min = 1e-13 * std::max(1.0, t0);
        bool strictly_feasible = false;
        while (true) {
            if (!center(z, mu, /*phase1=*/true, result)) return result;
            double t = z[n_];
            if (t <= -opts_.feasible_margin) {
                strictly_feasible = true;
                break;
            }
            double lower_bound = t - 2.0 * nu_ * mu;
            if (lower_bound > opts_.infeasible_tol) {
                result.status = SolveStatus::Infeasible;
                result.margin = t;
                result.message = "phase-I objective bounded below by " + std::to_string(lower_bound);
                return result;
            }
            if (mu <= mu_min) break;
            mu *= 0.2;
        }

        result.margin = z[n_];
        if (!strictly_feasible) {
            result.x.assign(z.data(), z.data() + n_);
            if (std::abs(z[n_]) <= opts_.marginal_tol) {
                result.status = SolveStatus::Marginal;
                result.message = "phase-I stalled at near-zero margin";
            } else {
                result.status = SolveStatus::Unknown;
                result.message = "phase-I undecided (final margin " + std::to_string(z[n_]) + ")";
            }
            result.objective = objective_value(z.head(n_));
            return result;
        }

        // ---- phase II: regularizer descent from the interior point ----
        Eigen::VectorXd best = z.head(n_);
        double obj_scale = 1.0 + std::abs(objective_value(best));
        if (!p_.objective().empty()) {
            Eigen::VectorXd y = best;
            double mu2 = obj_scale / nu_;
            const double mu2_min = opts_.objective_gap * obj_scale / nu_;
            int outer = 0;
            while (mu2 > mu2_min && outer++ < 60) {
                SolveResult scratch;
                if (!center(y, mu2, /*phase1=*/false, scratch)) break;  // keep last good point
                best = y;
                mu2 *= 0.2;
            }
        }
        result.x.assign(best.data(), best.data() + n_);
        result.status = SolveStatus::Feasible;
        result.objective = objective_value(best);
        return result;
    }

private:
    const Problem& p_;
    SolverOptions opts_;
    int n_;
    double nu_ = 0.0;
    std::vector<BlockInfo> blocks_;
    std::vector<const Problem::Constraint*> eqs_;
    std::vector<const Problem::Constraint*> ineqs_;
    Eigen::MatrixXd eq_mat_;  // independent equality rows
    Eigen::VectorXd eq_rhs_;
    int steps_ = 0;

    void build_equalities() {
        Eigen::MatrixXd all(static_cast<int>(eqs_.size()), n_);
        Eigen::VectorXd rhs(static_cast<int>(eqs_.size()));
        all.setZero();
        for (std::size_t r = 0; r < eqs_.size(); ++r) {
            for (const auto& term : eqs_[r]->terms) all(static_cast<int>(r), term.var) += term.coef;
            rhs[static_cast<int>(r)] = eqs_[r]->rhs;
        }
        if (all.rows() == 0) {
            eq_mat_ = all;
            eq_rhs_ = rhs;
            return;
        }
        // keep an independent subset of rows; consistency of dropped
        // rows is checked against the least-squares start point
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(all.transpose());
        int rank = static_cast<int>(qr.rank());
        eq_mat_.resize(rank, n_);
        eq_rhs_.resize(rank);
        for (int i = 0; i < rank; ++i) {
            int row = static_cast<int>(qr.colsPermutation().indices()[i]);
            eq_mat_.row(i) = all.row(row);
            eq_rhs_[i] = rhs[row];
        }
    }

    bool initial_point(Eigen::VectorXd& x, SolveResult& result) {
        x = Eigen::VectorXd::Zero(n_);
        if (eq_mat_.rows() == 0) return true;
        Eigen::MatrixXd all(static_cast<int>(eqs_.size()), n_);
        Eigen::VectorXd rhs(static_cast<int>(eqs_.size()));
        all.setZero();
        for (std::size_t r = 0; r < eqs_.size(); ++r) {
            for (const auto& term : eqs_[r]->terms) all(static_cast<int>(r), term.var) += term.coef;
            rhs[static_cast<int>(r)] = eqs_[r]->rhs;
        }
        x = all.completeOrthogonalDecomposition().solve(rhs);
        double residual = (all * x - rhs).lpNorm<Eigen::Infinity>();
        if (residual > 1e-7 * (1.0 + rhs.lpNorm<Eigen::Infinity>())) {
            result.status = SolveStatus::Infeasible;
            result.message = "equality constraints are inconsistent";
            return false;
        }
        return true;
    }

    double row_value(const Problem::Constraint& c, const Eigen::VectorXd& x) const {
        double acc = 0;
        for (const auto& term : c.terms) acc += term.coef * x[term.var];
        return acc;
    }

    double objective_value(const Eigen::VectorXd& x) const {
        double acc = 0;
        for (const auto& term : p_.objective()) acc += term.coef * x[term.var];
        return acc;
    }

    Eigen::MatrixXd block_matrix(const Eigen::VectorXd& z, const BlockInfo& b, double t) const {
        Eigen::MatrixXd mat(b.size, b.size);
        int idx = b.base;
        for (int i = 0; i < b.size; ++i)
            for (int j = 0; j <= i; ++j) {
                mat(i, j) = mat(j, i) = z[idx];
                ++idx;
            }
        mat.diagonal().array() += t;
        return mat;
    }

    bool in_domain(const Eigen::VectorXd& z, bool phase1) const {
        double t = phase1 ? z[z.size() - 1] : 0.0;
        for (const auto& b : blocks_) {
            Eigen::LLT<Eigen::MatrixXd> llt(block_matrix(z, b, t));
            if (llt.info() != Eigen::Success) return false;
        }
        for (const auto* c : ineqs_)
            if (row_value(*c, z.head(n_)) - c->rhs + t <= 0) return false;
        return true;
    }

    double barrier_value(const Eigen::VectorXd& z, double mu, bool phase1) const {
        double t = phase1 ? z[z.size() - 1] : 0.0;
        double f = phase1 ? t : objective_value(z.head(n_));
        for (const auto& b : blocks_) {
            Eigen::LLT<Eigen::MatrixXd> llt(block_matrix(z, b, t));
            if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
            double logdet = 0;
            for (int i = 0; i < b.size; ++i) logdet += std::log(llt.matrixL()(i, i));
            f -= mu * 2.0 * logdet;
        }
        for (const auto* c : ineqs_) {
            double s = row_value(*c, z.head(n_)) - c->rhs + t;
            if (s <= 0) return std::numeric_limits<double>::infinity();
            f -= mu * std::log(s);
        }
        return f;
    }

    /// Newton iterations at fixed mu on the equality manifold. Returns
    /// false only on numerical breakdown.
    bool center(Eigen::VectorXd& z, double mu, bool phase1, SolveResult& result) {
        const int dim = phase1 ? n_ + 1 : n_;
        const int me = static_cast<int>(eq_mat_.rows());
        for (int iter = 0; iter < 40; ++iter) {
            if (++steps_ > opts_.max_newton_steps) {
                result.status = SolveStatus::Unknown;
                result.message = "newton step budget exhausted";
                result.x.assign(z.data(), z.data() + n_);
                return false;
            }
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
            Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(dim, dim);
            if (phase1)
                grad[dim - 1] = 1.0;
            else
                for (const auto& term : p_.objective()) grad[term.var] += term.coef;

            double t = phase1 ? z[dim - 1] : 0.0;
            for (const auto& b : blocks_) {
                Eigen::MatrixXd mat = block_matrix(z, b, t);
                Eigen::LLT<Eigen::MatrixXd> llt(mat);
                if (llt.info() != Eigen::Success) {
                    result.status = SolveStatus::Failure;
                    result.message = "barrier evaluation left the cone";
                    return false;
                }
                Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(b.size, b.size));
                Eigen::MatrixXd w2 = w * w;

                // gradient and Hessian of -logdet over the plain
                // lower-triangle coordinates:
                //   d/dx_ij        = tr(W E_ij)
                //   d2/dx_ij dx_kl = tr(W E_ij W E_kl)
                // with E_ij = e_i e_j^T + e_j e_i^T off the diagonal.
                int vi = b.base;
                for (int i = 0; i < b.size; ++i)
                    for (int j = 0; j <= i; ++j, ++vi) {
                        grad[vi] -= mu * (i == j ? w(i, i) : 2.0 * w(i, j));
                        int vk = b.base;
                        for (int k = 0; k < b.size; ++k)
                            for (int l = 0; l <= k; ++l, ++vk) {
                                double h = w(i, k) * w(j, l) + w(i, l) * w(j, k);
                                if (i != j && k != l)
                                    h *= 2.0;
                                else if (i == j && k == l)
                                    h *= 0.5;
                                hess(vi, vk) += mu * h;
                            }
                        if (phase1) {
                            double cross = (i == j ? w2(i, i) : 2.0 * w2(i, j));
                            hess(vi, dim - 1) += mu * cross;
                            hess(dim - 1, vi) += mu * cross;
                        }
                    }
                if (phase1) {
                    grad[dim - 1] -= mu * w.trace();
                    hess(dim - 1, dim - 1) += mu * w2.trace();
                }
            }
            for (const auto* c : ineqs_) {
                double s = row_value(*c, z.head(n_)) - c->rhs + t;
                double gs = mu / s, hs = mu / (s * s);
                for (const auto& term : c->terms) {
                    grad[term.var] -= gs * term.coef;
                    for (const auto& term2 : c->terms)
                        hess(term.var, term2.var) += hs * term.coef * term2.coef;
                    if (phase1) {
                        hess(term.var, dim - 1) += hs * term.coef;
                        hess(dim - 1, term.var) += hs * term.coef;
                    }
                }
                if (phase1) {
                    grad[dim - 1] -= gs;
                    hess(dim - 1, dim - 1) += hs;
                }
            }

            // KKT system with light quasi-definite regularization
            double reg = 1e-12 * (1.0 + hess.trace() / dim);
            Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim + me, dim + me);
            kkt.topLeftCorner(dim, dim) = hess + reg * Eigen::MatrixXd::Identity(dim, dim);
            if (me > 0) {
                kkt.block(0, dim, n_, me) = eq_mat_.transpose();
                kkt.block(dim, 0, me, n_) = eq_mat_;
                kkt.bottomRightCorner(me, me) = -1e-12 * Eigen::MatrixXd::Identity(me, me);
            }
            Eigen::VectorXd rhs(dim + me);
            rhs.head(dim) = -grad;
            if (me > 0) rhs.tail(me) = eq_rhs_ - eq_mat_ * z.head(n_);
            Eigen::VectorXd sol = kkt.partialPivLu().solve(rhs);
            if (!sol.allFinite()) {
                result.status = SolveStatus::Failure;
                result.message = "singular KKT system";
                return false;
            }
            Eigen::VectorXd dz = sol.head(dim);

            double decrement = dz.dot(hess * dz);
            if (decrement <= 2e-10 * std::max(1.0, std::abs(barrier_value(z, mu, phase1)))) return true;

            double f0 = barrier_value(z, mu, phase1);
            double alpha = 1.0;
            Eigen::VectorXd trial;
            bool accepted = false;
            for (int back = 0; back < 60; ++back) {
                trial = z + alpha * dz;
                double f1 = barrier_value(trial, mu, phase1);
                if (std::isfinite(f1) && f1 < f0) {
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) return true;  // flat within line-search resolution
            z = trial;
        }
        return true;
    }
};

}  // namespace

SolveResult solve(const Problem& problem, const SolverOptions& options) {
    try {
        Solver solver(problem, options);
        SolveResult result = solver.run();
        return result;
    } catch (const std::exception& e) {
        SolveResult result;
        result.status = SolveStatus::Failure;
        result.message = e.what();
        return result;
    }
}

}  // namespace pcbf::conic
