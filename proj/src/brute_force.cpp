#include "pcbf/brute_force.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "pcbf/exact_roots.hpp"

namespace pcbf {

namespace {

void check_budget(int m, int horizon, bool override_budget) {
    if (horizon < 1) throw std::invalid_argument("brute_force_unsafe: horizon must be at least 1");
    if (!override_budget && std::pow(static_cast<double>(m), horizon) > 1e7)
        throw BudgetExceededError("brute_force_unsafe: m^L exceeds 10^7 expansions; pass override to force");
}

/// Exact path: enumerate words by length then lexicographically,
/// reusing prefix products along a DFS stack.
struct ExactSearch {
    const SwitchedSystem& sys;
    Rat threshold;  // unsafe iff lambda_max(A_w^T A_w) >= threshold
    int target_len = 0;

    std::optional<Word> found;

    bool dfs(const RatMat& prefix, Word& word) {
        if (static_cast<int>(word.size()) == target_len) {
            if (max_squared_singular_value_geq(prefix, threshold)) {
                found = word;
                return true;
            }
            return false;
        }
        for (int s = 1; s <= sys.alphabet.m; ++s) {
            word.push_back(s);
            RatMat next = sys.mode_matrix(s) * prefix;  // x(t+1) = A_s x(t)
            if (dfs(next, word)) return true;
            word.pop_back();
        }
        return false;
    }
};

std::optional<UnsafeWitness> exact_linear_search(const SwitchedSystem& sys, const Rat& r0, const Rat& ru,
                                                 int horizon) {
    ExactSearch search{sys, ru / r0, 0, std::nullopt};
    for (int len = 1; len <= horizon; ++len) {
        search.target_len = len;
        Word word;
        if (search.dfs(RatMat::identity(sys.dimension), word)) break;
    }
    if (!search.found) return std::nullopt;

    const Word& w = *search.found;
    RatMat product = RatMat::identity(sys.dimension);
    for (int s : w) product = sys.mode_matrix(s) * product;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(product.to_double(), Eigen::ComputeFullV);
    Eigen::VectorXd direction = svd.matrixV().col(0);
    double radius = std::sqrt(rat_to_double(r0));
    UnsafeWitness witness;
    witness.word = w;
    witness.t = static_cast<int>(w.size());
    witness.x0.resize(sys.dimension);
    for (int i = 0; i < sys.dimension; ++i) witness.x0[i] = radius * direction[i];
    return witness;
}

std::vector<std::vector<double>> sample_points(const Box& box, const Region& x0_region,
                                               int points_per_axis, bool include_corners) {
    int n = static_cast<int>(box.lower.size());
    std::vector<std::vector<double>> points;
    std::vector<int> index(n, 0);
    while (true) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) {
            double lo = *box.lower[i], hi = *box.upper[i];
            x[i] = points_per_axis == 1 ? lo : lo + (hi - lo) * index[i] / (points_per_axis - 1);
        }
        if (in_region(x0_region, x)) points.push_back(std::move(x));
        int axis = 0;
        while (axis < n && ++index[axis] == points_per_axis) index[axis++] = 0;
        if (axis == n) break;
    }
    if (include_corners && n <= 16) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? *box.upper[i] : *box.lower[i];
            if (in_region(x0_region, x)) points.push_back(std::move(x));
        }
    }
    return points;
}

struct SampledSearch {
    const SwitchedSystem& sys;
    const SafetySpec& spec;
    const std::vector<std::vector<double>>& starts;
    int target_len = 0;

    std::optional<UnsafeWitness> found;

    // One DFS level advances every sampled trajectory by the same mode.
    bool dfs(const std::vector<std::vector<double>>& states, Word& word) {
        if (static_cast<int>(word.size()) == target_len) {
            for (std::size_t p = 0; p < states.size(); ++p) {
                if (in_region(spec.Xu, states[p])) {
                    found = UnsafeWitness{word, starts[p], target_len};
                    return true;
                }
            }
            return false;
        }
        for (int s = 1; s <= sys.alphabet.m; ++s) {
            word.push_back(s);
            std::vector<std::vector<double>> next;
            next.reserve(states.size());
            for (const auto& x : states) next.push_back(simulate_numeric(sys, x, {s}).final_state());
            if (dfs(next, word)) return true;
            word.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<UnsafeWitness> brute_force_unsafe(const SwitchedSystem& sys, const SafetySpec& spec,
                                                int horizon, const BruteForceOptions& options) {
    check_budget(sys.alphabet.m, horizon, options.override_budget);

    const auto* ball0 = std::get_if<Ball>(&spec.X0);
    const auto* ballu = std::get_if<BallComplement>(&spec.Xu);
    if (sys.all_linear() && ball0 && ballu)
        return exact_linear_search(sys, ball0->r2, ballu->r2, horizon);

    Box box;
    if (options.sample_box) {
        box = *options.sample_box;
    } else {
        auto derived = region_box(spec.X0, sys.dimension);
        if (!derived || !derived->bounded()) derived = region_box(spec.X, sys.dimension);
        if (!derived || !derived->bounded())
            throw std::invalid_argument(
                "brute_force_unsafe: no bounded sampling box derivable from X0 or X; provide one");
        box = *derived;
    }
    auto starts = sample_points(box, spec.X0, options.grid_points_per_axis, options.include_corners);
    if (starts.empty()) return std::nullopt;

    SampledSearch search{sys, spec, starts, 0, std::nullopt};
    for (int len = 1; len <= horizon && !search.found; ++len) {
        search.target_len = len;
        Word word;
        search.dfs(starts, word);
    }
    return search.found;
}

}  // namespace pcbf
