#include "pcbf/system.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "pcbf/rng.hpp"

namespace pcbf {

SwitchedSystem::SwitchedSystem(int dim, Alphabet a, std::vector<ModeDynamics> mode_list)
    : dimension(dim), alphabet(a), modes(std::move(mode_list)) {
    if (dimension < 1) throw std::invalid_argument("SwitchedSystem: dimension must be positive");
    if (static_cast<int>(modes.size()) != alphabet.m)
        throw std::invalid_argument("SwitchedSystem: mode count must equal alphabet size");
    for (const ModeDynamics& m : modes) {
        if (const auto* lin = std::get_if<LinearMode>(&m)) {
            if (lin->A.rows() != static_cast<std::size_t>(dimension) ||
                lin->A.cols() != static_cast<std::size_t>(dimension))
                throw std::invalid_argument("SwitchedSystem: mode matrix dimension mismatch");
        } else {
            const auto& poly = std::get<PolyMode>(m);
            if (static_cast<int>(poly.f.size()) != dimension)
                throw std::invalid_argument("SwitchedSystem: polynomial mode arity mismatch");
            for (const Poly& p : poly.f)
                if (p.num_vars() != dimension)
                    throw std::invalid_argument("SwitchedSystem: polynomial variable count mismatch");
        }
    }
}

const ModeDynamics& SwitchedSystem::mode(int symbol) const {
    if (!alphabet.contains(symbol)) throw std::out_of_range("SwitchedSystem: symbol out of range");
    return modes[symbol - 1];
}

bool SwitchedSystem::all_linear() const {
    for (const auto& m : modes)
        if (!std::holds_alternative<LinearMode>(m)) return false;
    return true;
}

bool SwitchedSystem::all_polynomial() const {
    for (const auto& m : modes)
        if (!std::holds_alternative<PolyMode>(m)) return false;
    return true;
}

const RatMat& SwitchedSystem::mode_matrix(int symbol) const {
    const auto* lin = std::get_if<LinearMode>(&mode(symbol));
    if (!lin) throw std::invalid_argument("SwitchedSystem: mode is not linear");
    return lin->A;
}

std::vector<Poly> SwitchedSystem::mode_as_polynomials(int symbol) const {
    const ModeDynamics& m = mode(symbol);
    if (const auto* poly = std::get_if<PolyMode>(&m)) return poly->f;
    const RatMat& a = std::get<LinearMode>(m).A;
    std::vector<Poly> f;
    for (int i = 0; i < dimension; ++i) {
        Poly row(dimension);
        for (int j = 0; j < dimension; ++j) {
            Poly::Exponents e(dimension, 0);
            e[j] = 1;
            row.add_term(e, a(i, j));
        }
        f.push_back(std::move(row));
    }
    return f;
}

bool in_region(const Region& r, const RatVec& x) {
    if (std::holds_alternative<FullSpace>(r)) return true;
    if (const auto* b = std::get_if<Ball>(&r)) return squared_norm(x) <= b->r2;
    if (const auto* b = std::get_if<BallComplement>(&r)) return squared_norm(x) >= b->r2;
    const auto& sa = std::get<SemiAlgebraic>(r);
    for (const Poly& g : sa.ineqs)
        if (g.evaluate(x) < 0) return false;
    return true;
}

bool in_region(const Region& r, const std::vector<double>& x) {
    if (std::holds_alternative<FullSpace>(r)) return true;
    double n2 = 0;
    for (double v : x) n2 += v * v;
    if (const auto* b = std::get_if<Ball>(&r)) return n2 <= rat_to_double(b->r2);
    if (const auto* b = std::get_if<BallComplement>(&r)) return n2 >= rat_to_double(b->r2);
    const auto& sa = std::get<SemiAlgebraic>(r);
    for (const Poly& g : sa.ineqs)
        if (to_double(g).evaluate(x) < 0) return false;
    return true;
}

bool Box::bounded() const {
    for (const auto& b : lower)
        if (!b) return false;
    for (const auto& b : upper)
        if (!b) return false;
    return true;
}

std::optional<Box> region_box(const Region& r, int dimension) {
    Box box;
    box.lower.assign(dimension, std::nullopt);
    box.upper.assign(dimension, std::nullopt);
    if (const auto* b = std::get_if<Ball>(&r)) {
        double radius = std::sqrt(rat_to_double(b->r2));
        for (int i = 0; i < dimension; ++i) {
            box.lower[i] = -radius;
            box.upper[i] = radius;
        }
        return box;
    }
    if (const auto* sa = std::get_if<SemiAlgebraic>(&r)) {
        // Collect bounds from single-variable affine constraints
        // a*x_i + c >= 0; other inequalities do not tighten the box.
        for (const Poly& g : sa->ineqs) {
            int var = -1;
            bool affine_single = true;
            double a = 0, c = 0;
            for (const auto& [e, coef] : g.terms()) {
                int total = 0, nonzero_var = -1;
                for (int i = 0; i < g.num_vars(); ++i) {
                    total += e[i];
                    if (e[i] > 0) nonzero_var = i;
                }
                if (total == 0) {
                    c = rat_to_double(coef);
                } else if (total == 1) {
                    if (var != -1 && var != nonzero_var) {
                        affine_single = false;
                        break;
                    }
                    var = nonzero_var;
                    a = rat_to_double(coef);
                } else {
                    affine_single = false;
                    break;
                }
            }
            if (!affine_single || var == -1 || a == 0) continue;
            double bound = -c / a;
            if (a > 0) {
                if (!box.lower[var] || *box.lower[var] < bound) box.lower[var] = bound;
            } else {
                if (!box.upper[var] || *box.upper[var] > bound) box.upper[var] = bound;
            }
        }
        return box;
    }
    return std::nullopt;  // complement/full space carry no box
}

namespace {

/// Grid over a bounded box, used by the sampling-based checks.
std::vector<std::vector<double>> grid_points(const Box& box, int points_per_axis) {
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

}  // namespace

Disjointness check_disjoint(const SafetySpec& spec, int dimension, int grid_points_per_axis) {
    if (const auto* b0 = std::get_if<Ball>(&spec.X0)) {
        if (const auto* bu = std::get_if<BallComplement>(&spec.Xu))
            return b0->r2 < bu->r2 ? Disjointness::Disjoint : Disjointness::Overlapping;
    }
    auto box = region_box(spec.X0, dimension);
    if (!box || !box->bounded()) {
        box = region_box(spec.X, dimension);
        if (!box || !box->bounded()) return Disjointness::Undetermined;
    }
    for (const auto& x : grid_points(*box, grid_points_per_axis))
        if (in_region(spec.X0, x) && in_region(spec.Xu, x)) return Disjointness::Overlapping;
    return Disjointness::Undetermined;  // sampling cannot certify disjointness
}

Trajectory simulate(const SwitchedSystem& sys, const RatVec& x0, const Word& w) {
    if (static_cast<int>(x0.size()) != sys.dimension)
        throw std::invalid_argument("simulate: initial state dimension mismatch");
    validate_word(sys.alphabet, w);
    Trajectory traj;
    traj.word = w;
    traj.states.push_back(x0);
    for (int symbol : w) {
        const ModeDynamics& m = sys.mode(symbol);
        const RatVec& x = traj.states.back();
        if (const auto* lin = std::get_if<LinearMode>(&m)) {
            traj.states.push_back(lin->A * x);
        } else {
            const auto& poly = std::get<PolyMode>(m);
            RatVec next(sys.dimension);
            for (int i = 0; i < sys.dimension; ++i) next[i] = poly.f[i].evaluate(x);
            traj.states.push_back(std::move(next));
        }
    }
    return traj;
}

NumericTrajectory simulate_numeric(const SwitchedSystem& sys, const std::vector<double>& x0, const Word& w) {
    if (static_cast<int>(x0.size()) != sys.dimension)
        throw std::invalid_argument("simulate: initial state dimension mismatch");
    validate_word(sys.alphabet, w);
    NumericTrajectory traj;
    traj.word = w;
    traj.states.push_back(x0);
    for (int symbol : w) {
        const ModeDynamics& m = sys.mode(symbol);
        const auto& x = traj.states.back();
        std::vector<double> next(sys.dimension);
        if (const auto* lin = std::get_if<LinearMode>(&m)) {
            for (int i = 0; i < sys.dimension; ++i) {
                double acc = 0;
                for (int j = 0; j < sys.dimension; ++j) acc += rat_to_double(lin->A(i, j)) * x[j];
                next[i] = acc;
            }
        } else {
            const auto& poly = std::get<PolyMode>(m);
            for (int i = 0; i < sys.dimension; ++i) next[i] = to_double(poly.f[i]).evaluate(x);
        }
        traj.states.push_back(std::move(next));
    }
    return traj;
}

double spectral_radius(const Eigen::MatrixXd& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    double rho = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) rho = std::max(rho, std::abs(solver.eigenvalues()[i]));
    return rho;
}

SwitchedSystem random_stable_system(int dimension, const Alphabet& alphabet, std::uint64_t seed) {
    if (dimension < 1) throw std::invalid_argument("random_stable_system: dimension must be positive");
    Rng rng(seed);
    std::vector<ModeDynamics> modes;
    for (int s = 0; s < alphabet.m; ++s) {
        Eigen::MatrixXd a(dimension, dimension);
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) a(i, j) = rng.next_symmetric();
        while (spectral_radius(a) >= 1.0) a /= 1.05;
        modes.push_back(LinearMode{RatMat::from_double(a)});
    }
    return SwitchedSystem(dimension, alphabet, std::move(modes));
}

}  // namespace pcbf
