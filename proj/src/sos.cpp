#include "pcbf/sos.hpp"

#include <cmath>
#include <functional>

namespace pcbf::sos {

std::vector<std::vector<int>> monomials_up_to(int num_vars, int max_degree) {
    std::vector<std::vector<int>> out;
    // enumerate degree by degree, lexicographic within each degree
    for (int degree = 0; degree <= max_degree; ++degree) {
        std::vector<int> exps(num_vars, 0);
        // place `degree` units over num_vars slots
        std::function<void(int, int)> place = [&](int var, int remaining) {
            if (var == num_vars - 1) {
                exps[var] = remaining;
                out.push_back(exps);
                return;
            }
            for (int take = remaining; take >= 0; --take) {
                exps[var] = take;
                place(var + 1, remaining - take);
            }
            exps[var] = 0;
        };
        place(0, degree);
    }
    return out;
}

void accumulate(AffinePoly& target, const PolyD& p, double scale) {
    if (scale == 0.0) return;
    for (const auto& [e, c] : p.terms()) target[e].constant += scale * c;
}

void accumulate_scaled_var(AffinePoly& target, const PolyD& p, int var, double scale) {
    if (scale == 0.0) return;
    for (const auto& [e, c] : p.terms()) target[e].terms.push_back({var, scale * c});
}

void accumulate_gram(AffinePoly& target, conic::Problem& problem, int block,
                     const std::vector<std::vector<int>>& basis, const PolyD& multiplier,
                     double scale) {
    const int n = static_cast<int>(basis.empty() ? 0 : basis[0].size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            double mult = (j == k) ? 1.0 : 2.0;
            std::vector<int> product(n);
            for (int i = 0; i < n; ++i) product[i] = basis[j][i] + basis[k][i];
            int var = problem.block_var(block, static_cast<int>(j), static_cast<int>(k));
            if (multiplier.is_zero()) continue;
            for (const auto& [e, c] : multiplier.terms()) {
                std::vector<int> total(n);
                for (int i = 0; i < n; ++i) total[i] = product[i] + e[i];
                target[total].terms.push_back({var, scale * mult * c});
            }
        }
}

void emit_identity(conic::Problem& problem, const AffinePoly& identity) {
    for (const auto& [exps, coef] : identity) {
        if (coef.terms.empty()) {
            if (std::abs(coef.constant) > 1e-14)
                throw std::invalid_argument("sos identity has an unmatched constant coefficient");
            continue;
        }
        problem.add_constraint(coef.terms, conic::Problem::Relation::Eq, -coef.constant);
    }
}

PolyD GramBlock::expand(int num_vars) const {
    PolyD out(num_vars);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<int> e(num_vars);
            for (int i = 0; i < num_vars; ++i) e[i] = basis[j][i] + basis[k][i];
            out.add_term(e, gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)));
        }
    return out;
}

std::vector<PolyD> region_polynomials(const Region& region, int dimension) {
    std::vector<PolyD> out;
    if (std::holds_alternative<FullSpace>(region)) return out;
    if (const auto* ball = std::get_if<Ball>(&region)) {
        PolyD g(dimension);
        g.add_term(std::vector<int>(dimension, 0), rat_to_double(ball->r2));
        for (int i = 0; i < dimension; ++i) {
            std::vector<int> e(dimension, 0);
            e[i] = 2;
            g.add_term(e, -1.0);
        }
        out.push_back(std::move(g));
        return out;
    }
    if (const auto* comp = std::get_if<BallComplement>(&region)) {
        PolyD g(dimension);
        g.add_term(std::vector<int>(dimension, 0), -rat_to_double(comp->r2));
        for (int i = 0; i < dimension; ++i) {
            std::vector<int> e(dimension, 0);
            e[i] = 2;
            g.add_term(e, 1.0);
        }
        out.push_back(std::move(g));
        return out;
    }
    for (const Poly& g : std::get<SemiAlgebraic>(region).ineqs) out.push_back(to_double(g));
    return out;
}

}  // namespace pcbf::sos
