#pragma once

#include <Eigen/Dense>

#include <map>

#include "pcbf/conic.hpp"
#include "pcbf/polynomial.hpp"
#include "pcbf/system.hpp"

namespace pcbf::sos {

/// Graded lexicographic monomial exponents up to the degree bound.
std::vector<std::vector<int>> monomials_up_to(int num_vars, int max_degree);

/// Polynomial whose coefficients are affine in conic decision
/// variables; the carrier for coefficient-matching equalities.
struct AffineCoef {
    double constant = 0.0;
    std::vector<conic::Problem::Term> terms;
};

using AffinePoly = std::map<std::vector<int>, AffineCoef>;

/// target += scale * p
void accumulate(AffinePoly& target, const PolyD& p, double scale);

/// target += scale * var * p  (one decision variable times a numeric polynomial)
void accumulate_scaled_var(AffinePoly& target, const PolyD& p, int var, double scale);

/// target += scale * z^T G z * g, where G is the PSD block `block` of
/// the problem and z the monomial basis; g = 1 when omitted.
void accumulate_gram(AffinePoly& target, conic::Problem& problem, int block,
                     const std::vector<std::vector<int>>& basis, const PolyD& multiplier,
                     double scale);

/// Emit one equality per monomial: sum of affine coefficients == 0.
void emit_identity(conic::Problem& problem, const AffinePoly& identity);

/// Positive semidefinite factor together with its monomial basis.
struct GramBlock {
    std::vector<std::vector<int>> basis;
    Eigen::MatrixXd gram;

    /// The polynomial z^T G z.
    PolyD expand(int num_vars) const;
};

/// Region boundary polynomials g_i with {x : g_i(x) >= 0}; balls and
/// complements are lowered to their quadratic description.
std::vector<PolyD> region_polynomials(const Region& region, int dimension);

}  // namespace pcbf::sos
