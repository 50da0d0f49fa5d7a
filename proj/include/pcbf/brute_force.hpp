#pragma once

#include <optional>

#include "pcbf/system.hpp"

namespace pcbf {

struct UnsafeWitness {
    Word word;               // shortest violating word, lex-smallest among shortest
    std::vector<double> x0;  // initial state in X0 reaching Xu
    int t = 0;               // violation time, equals word length
};

struct BruteForceOptions {
    int grid_points_per_axis = 11;
    bool include_corners = true;
    bool override_budget = false;
    std::optional<Box> sample_box;  // overrides the derived X0 box
};

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Searches all words up to the horizon for a safety violation.
///
/// Linear modes with Ball X0 and BallComplement Xu are decided exactly
/// per word: unsafe iff r0 * sigma_max(A_w)^2 >= ru, checked over the
/// rationals; the witness direction is the top right singular vector.
/// Other shapes fall back to simulating a sampled X0 grid, which is
/// sound (any witness is genuine) but incomplete.
std::optional<UnsafeWitness> brute_force_unsafe(const SwitchedSystem& sys, const SafetySpec& spec,
                                                int horizon, const BruteForceOptions& options = {});

}  // namespace pcbf
