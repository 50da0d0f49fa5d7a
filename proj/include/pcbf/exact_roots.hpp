#pragma once

#include <vector>

#include "pcbf/linalg.hpp"

namespace pcbf {

/// Coefficients of det(lambda*I - M), ascending powers, exact
/// (Faddeev-LeVerrier recursion).
std::vector<Rat> characteristic_polynomial(const RatMat& m);

/// Number of distinct real roots of p in [a, +infinity), via Sturm
/// sequences over the rationals.
int count_real_roots_geq(const std::vector<Rat>& poly, const Rat& a);

/// Exact decision of lambda_max(M) >= c for symmetric M (all
/// eigenvalues real).
bool max_eigenvalue_geq(const RatMat& symmetric, const Rat& c);

/// Exact decision of sigma_max(A)^2 >= c, i.e. lambda_max(A^T A) >= c.
bool max_squared_singular_value_geq(const RatMat& a, const Rat& c);

}  // namespace pcbf
