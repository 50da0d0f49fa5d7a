#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pcbf/alphabet.hpp"
#include "pcbf/linalg.hpp"
#include "pcbf/polynomial.hpp"

namespace pcbf {

struct LinearMode {
    RatMat A;
};

struct PolyMode {
    std::vector<Poly> f;  // one polynomial per coordinate
};

using ModeDynamics = std::variant<LinearMode, PolyMode>;

/// Discrete-time switched system: x(t+1) = f_{sigma(t)}(x(t)) with the
/// active mode chosen arbitrarily from the alphabet at each step.
struct SwitchedSystem {
    int dimension = 0;
    Alphabet alphabet;
    std::vector<ModeDynamics> modes;  // modes[s-1] drives symbol s

    SwitchedSystem(int dim, Alphabet a, std::vector<ModeDynamics> mode_list);

    const ModeDynamics& mode(int symbol) const;
    bool all_linear() const;
    bool all_polynomial() const;
    /// Linear mode matrix for the symbol; throws on polynomial modes.
    const RatMat& mode_matrix(int symbol) const;
    /// Every mode as a polynomial map (linear matrices are lifted).
    std::vector<Poly> mode_as_polynomials(int symbol) const;
};

struct Ball {
    Rat r2;  // sum x_i^2 <= r2
};

struct BallComplement {
    Rat r2;  // sum x_i^2 >= r2
};

struct SemiAlgebraic {
    std::vector<Poly> ineqs;  // region = {x : g_i(x) >= 0 for all i}
};

struct FullSpace {};

using Region = std::variant<Ball, BallComplement, SemiAlgebraic, FullSpace>;

bool in_region(const Region& r, const RatVec& x);
bool in_region(const Region& r, const std::vector<double>& x);

/// Per-axis interval bounds, when derivable: balls give their bounding
/// cube, semialgebraic regions contribute single-variable affine
/// inequalities. Unbounded axes are reported as absent.
struct Box {
    std::vector<std::optional<double>> lower;
    std::vector<std::optional<double>> upper;

    bool bounded() const;
};

std::optional<Box> region_box(const Region& r, int dimension);

/// Safety specification Safe(X0, Xu): trajectories from X0 must avoid
/// Xu at all times under every switching sequence.
struct SafetySpec {
    Region X;
    Region X0;
    Region Xu;
};

/// X0 and Xu must be disjoint for the specification to be meaningful;
/// ball/ball-complement pairs are decided exactly, other shapes by
/// grid sampling.
enum class Disjointness { Disjoint, Overlapping, Undetermined };
Disjointness check_disjoint(const SafetySpec& spec, int dimension, int grid_points_per_axis = 11);

struct Trajectory {
    std::vector<RatVec> states;  // states.size() == word.size() + 1
    Word word;

    const RatVec& final_state() const { return states.back(); }
};

struct NumericTrajectory {
    std::vector<std::vector<double>> states;
    Word word;

    const std::vector<double>& final_state() const { return states.back(); }
};

/// Exact simulation; rational inputs give rational states.
Trajectory simulate(const SwitchedSystem& sys, const RatVec& x0, const Word& w);

/// Floating-point simulation for long horizons and sampled searches.
NumericTrajectory simulate_numeric(const SwitchedSystem& sys, const std::vector<double>& x0, const Word& w);

/// Modes drawn entrywise i.i.d. uniform on [-1, 1], then divided by
/// 1.05 until the spectral radius drops below 1. Deterministic per seed.
SwitchedSystem random_stable_system(int dimension, const Alphabet& alphabet, std::uint64_t seed);

double spectral_radius(const Eigen::MatrixXd& a);

}  // namespace pcbf
