#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "pcbf/conic.hpp"

using namespace pcbf;

TEST_SUITE_BEGIN("conic");

TEST_CASE("strictly feasible box: P psd with bounded diagonal") {
    // find P (2x2) psd with P11 = 1, P22 = 2, P12 free, trace minimal
    conic::Problem p;
    int b = p.add_block(2);
    p.add_constraint({{p.block_var(b, 0, 0), 1.0}}, conic::Problem::Relation::Eq, 1.0);
    p.add_constraint({{p.block_var(b, 1, 1), 1.0}}, conic::Problem::Relation::Eq, 2.0);
    p.add_trace_objective(b);
    auto r = conic::solve(p);
    REQUIRE(r.status == conic::SolveStatus::Feasible);
    CHECK(r.x[p.block_var(b, 0, 0)] == doctest::Approx(1.0));
    CHECK(r.x[p.block_var(b, 1, 1)] == doctest::Approx(2.0));
    // off-diagonal settles strictly inside the psd cone
    double off = r.x[p.block_var(b, 1, 0)];
    CHECK(off * off < 2.0);
}

TEST_CASE("scalar inequalities steer the objective") {
    // minimize x subject to x >= 3, x + y = 5, y >= 1
    conic::Problem p;
    int x = p.add_scalar();
    int y = p.add_scalar();
    p.add_constraint({{x, 1.0}}, conic::Problem::Relation::Ge, 3.0);
    p.add_constraint({{y, 1.0}}, conic::Problem::Relation::Ge, 1.0);
    p.add_constraint({{x, 1.0}, {y, 1.0}}, conic::Problem::Relation::Eq, 5.0);
    p.add_objective_term(x, 1.0);
    auto r = conic::solve(p);
    REQUIRE(r.status == conic::SolveStatus::Feasible);
    CHECK(r.x[x] == doctest::Approx(3.0).epsilon(1e-4));
    CHECK(r.x[y] == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("infeasible systems are certified") {
    // x >= 2 and x <= 1 via equality x + s = 1, s psd-ish scalar
    conic::Problem p;
    int x = p.add_scalar();
    p.add_constraint({{x, 1.0}}, conic::Problem::Relation::Ge, 2.0);
    p.add_constraint({{x, -1.0}}, conic::Problem::Relation::Ge, -1.0);
    auto r = conic::solve(p);
    CHECK(r.status == conic::SolveStatus::Infeasible);
}

TEST_CASE("infeasible psd block: diagonal forced negative") {
    conic::Problem p;
    int b = p.add_block(2);
    p.add_constraint({{p.block_var(b, 0, 0), 1.0}}, conic::Problem::Relation::Eq, -1.0);
    auto r = conic::solve(p);
    CHECK(r.status == conic::SolveStatus::Infeasible);
}

TEST_CASE("inconsistent equalities are infeasible") {
    conic::Problem p;
    int x = p.add_scalar();
    p.add_constraint({{x, 1.0}}, conic::Problem::Relation::Eq, 1.0);
    p.add_constraint({{x, 1.0}}, conic::Problem::Relation::Eq, 2.0);
    auto r = conic::solve(p);
    CHECK(r.status == conic::SolveStatus::Infeasible);
}

TEST_CASE("marginal instances surface as marginal, not infeasible") {
    // the only psd solution pins the block to zero
    conic::Problem p;
    int b = p.add_block(2);
    p.add_constraint({{p.block_var(b, 0, 0), 1.0}}, conic::Problem::Relation::Eq, 0.0);
    p.add_constraint({{p.block_var(b, 1, 1), 1.0}}, conic::Problem::Relation::Eq, 0.0);
    p.add_trace_objective(b);
    auto r = conic::solve(p);
    CHECK(r.status == conic::SolveStatus::Marginal);
    CHECK(std::abs(r.x[p.block_var(b, 1, 0)]) < 1e-6);
}

TEST_CASE("lyapunov-style block with slack variables") {
    // P - A^T P A >= 0 with A = 0.5 I, P >= I: encode slack S = P - A^T P A
    conic::Problem p;
    int bp = p.add_block(2);
    int bs = p.add_block(2);
    double a = 0.5;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j <= i; ++j) {
            // S_ij - (1 - a^2) P_ij = 0
            p.add_constraint({{p.block_var(bs, i, j), 1.0}, {p.block_var(bp, i, j), -(1 - a * a)}},
                             conic::Problem::Relation::Eq, 0.0);
        }
    // P_ii >= 1
    p.add_constraint({{p.block_var(bp, 0, 0), 1.0}}, conic::Problem::Relation::Ge, 1.0);
    p.add_constraint({{p.block_var(bp, 1, 1), 1.0}}, conic::Problem::Relation::Ge, 1.0);
    p.add_trace_objective(bp);
    auto r = conic::solve(p);
    REQUIRE(r.status == conic::SolveStatus::Feasible);
    Eigen::Matrix2d pm;
    pm << r.x[p.block_var(bp, 0, 0)], r.x[p.block_var(bp, 1, 0)], r.x[p.block_var(bp, 1, 0)],
        r.x[p.block_var(bp, 1, 1)];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(pm);
    CHECK(eig.eigenvalues().minCoeff() > -1e-9);
    CHECK(r.objective == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_SUITE_END();
