#include <doctest.h>

#include "pcbf/brute_force.hpp"
#include "pcbf/canonical.hpp"
#include "pcbf/necessity.hpp"
#include "pcbf/system.hpp"
#include "test_util.hpp"

using namespace pcbf;

namespace {

SwitchedSystem scaled_identity(int n, const Rat& factor) {
    RatMat a = RatMat::identity(n) * factor;
    return SwitchedSystem(n, Alphabet(1), {LinearMode{a}});
}

}  // namespace

TEST_SUITE_BEGIN("switched_core");

TEST_CASE("simulate the shift construction exactly") {
    auto [sys, spec] = build_unsafe_system(Alphabet(2), {1, 2, 1});
    RatVec x0{rat_frac(1, 8), 0, 0, 0};
    Trajectory traj = simulate(sys, x0, {1, 2, 1});
    REQUIRE(traj.states.size() == 4);
    CHECK(traj.final_state() == RatVec{0, 0, 0, 1});
    CHECK(in_region(spec.Xu, traj.final_state()));

    Trajectory empty = simulate(sys, x0, {});
    CHECK(empty.states.size() == 1);
    CHECK(empty.final_state() == x0);

    CHECK_THROWS_AS(simulate(sys, RatVec{1, 0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(simulate(sys, x0, {5}), std::out_of_range);
}

TEST_CASE("simulate the degraded platoon mode") {
    SwitchedSystem sys = data::platoon_system_modified();
    Trajectory t = simulate(sys, RatVec{1, 2}, {2});
    CHECK(t.final_state()[0] == parse_rational("0.88"));
    CHECK(t.final_state()[1] == parse_rational("1.44"));
}

TEST_CASE("simulation composes over word concatenation") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        SwitchedSystem sys = random_stable_system(3, Alphabet(2), rng.next_u64());
        RatVec x0{rat_from_double(rng.next_symmetric()), rat_from_double(rng.next_symmetric()),
                  rat_from_double(rng.next_symmetric())};
        Word w1, w2;
        for (int i = 0; i < 3; ++i) w1.push_back(1 + static_cast<int>(rng.next_below(2)));
        for (int i = 0; i < 4; ++i) w2.push_back(1 + static_cast<int>(rng.next_below(2)));
        Word both = w1;
        both.insert(both.end(), w2.begin(), w2.end());
        auto direct = simulate(sys, x0, both);
        auto staged = simulate(sys, simulate(sys, x0, w1).final_state(), w2);
        CHECK(direct.final_state() == staged.final_state());
    }
}

TEST_CASE("region membership is exact") {
    CHECK(in_region(Ball{rat_frac(1, 64)}, RatVec{rat_frac(1, 8), 0, 0, 0}));
    CHECK(in_region(BallComplement{Rat(1)}, RatVec{0, 0, 0, 1}));
    CHECK(in_region(FullSpace{}, RatVec{Rat(12345)}));
    CHECK_FALSE(in_region(Ball{rat_frac(1, 64)},
                          RatVec{rat_frac(1, 8), 0, 0, rat_frac(1, 1000000)}));

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        RatVec x{rat_from_double(rng.next_symmetric()), rat_from_double(rng.next_symmetric())};
        Rat r2 = rat_from_double(rng.next_unit() + 0.01);
        bool inside = in_region(Ball{r2}, x);
        bool above = squared_norm(x) > r2;
        CHECK(inside != above);
    }
}

TEST_CASE("semialgebraic membership evaluates every inequality") {
    SafetySpec spec = data::platoon_spec();
    CHECK(in_region(spec.X0, RatVec{1, 2}));
    CHECK_FALSE(in_region(spec.X0, RatVec{1, 4}));  // gap above 2
    CHECK(in_region(spec.Xu, RatVec{2, Rat(2) + rat_frac(1, 10)}));
    CHECK_FALSE(in_region(spec.Xu, RatVec{1, 2}));
    CHECK(check_disjoint(spec, 2) != Disjointness::Overlapping);
}

TEST_CASE("brute force: exact oracle on scaled identities") {
    SafetySpec spec{FullSpace{}, Ball{Rat(4)}, BallComplement{Rat(9)}};

    auto none = brute_force_unsafe(scaled_identity(3, rat_frac(1, 2)), spec, 10);
    CHECK_FALSE(none.has_value());

    auto witness = brute_force_unsafe(scaled_identity(3, Rat(2)), spec, 1);
    REQUIRE(witness.has_value());
    CHECK(witness->t == 1);
    CHECK(witness->word == Word{1});
    // double the witness and land outside radius-3 ball
    double n2 = 0;
    for (double v : witness->x0) n2 += 4.0 * v * v;
    CHECK(n2 >= 9.0 - 1e-9);
}

TEST_CASE("brute force finds the constructed violation word") {
    auto [sys, spec] = build_unsafe_system(Alphabet(2), {1, 2, 1});
    auto witness = brute_force_unsafe(sys, spec, 3);
    REQUIRE(witness.has_value());
    CHECK(witness->word == Word{1, 2, 1});
    CHECK(witness->t == 3);
}

TEST_CASE("brute force guards the exponential budget") {
    SafetySpec spec{FullSpace{}, Ball{Rat(4)}, BallComplement{Rat(9)}};
    CHECK_THROWS_AS(brute_force_unsafe(scaled_identity(2, rat_frac(1, 2)), spec, 0),
                    std::invalid_argument);
    SwitchedSystem two_modes(2, Alphabet(2),
                             {LinearMode{RatMat::identity(2) * rat_frac(1, 2)},
                              LinearMode{RatMat::identity(2) * rat_frac(1, 3)}});
    CHECK_THROWS_AS(brute_force_unsafe(two_modes, spec, 40), BudgetExceededError);
}

TEST_CASE("exact oracle dominates grid search on random 2-dim systems") {
    Rng rng(2025);
    for (int trial = 0; trial < 40; ++trial) {
        SwitchedSystem sys = random_stable_system(2, Alphabet(2), rng.next_u64());
        // inflate to make violations possible
        std::vector<ModeDynamics> modes;
        for (int s = 1; s <= 2; ++s) modes.push_back(LinearMode{sys.mode_matrix(s) * Rat(2)});
        SwitchedSystem inflated(2, Alphabet(2), std::move(modes));
        SafetySpec spec{FullSpace{}, Ball{Rat(1)}, BallComplement{Rat(4)}};

        auto oracle = brute_force_unsafe(inflated, spec, 4);

        // grid search: any violating trajectory from sampled X0
        bool grid_found = false;
        for (int len = 1; len <= 4 && !grid_found; ++len) {
            Word w(len, 1);
            while (true) {
                for (double a = -1; a <= 1 && !grid_found; a += 0.25)
                    for (double b = -1; b <= 1 && !grid_found; b += 0.25) {
                        if (a * a + b * b > 1) continue;
                        auto t = simulate_numeric(inflated, {a, b}, w);
                        double n2 = 0;
                        for (double v : t.final_state()) n2 += v * v;
                        if (n2 >= 4) grid_found = true;
                    }
                int i = len - 1;
                while (i >= 0 && w[i] == 2) w[i--] = 1;
                if (i < 0) break;
                ++w[i];
            }
        }
        if (grid_found) CHECK(oracle.has_value());
    }
}

TEST_CASE("sampled brute force on the degraded platoon") {
    auto witness = brute_force_unsafe(data::platoon_system_modified(), data::platoon_spec(), 5);
    REQUIRE(witness.has_value());
    auto traj = simulate_numeric(data::platoon_system_modified(), witness->x0, witness->word);
    CHECK(in_region(data::platoon_spec().Xu, traj.final_state()));
    CHECK(in_region(data::platoon_spec().X0, witness->x0));
}

TEST_CASE("random stable systems are stable and replayable") {
    SwitchedSystem a = random_stable_system(3, Alphabet(2), 7);
    SwitchedSystem b = random_stable_system(3, Alphabet(2), 7);
    for (int s = 1; s <= 2; ++s) {
        CHECK(a.mode_matrix(s) == b.mode_matrix(s));
        CHECK(spectral_radius(a.mode_matrix(s).to_double()) < 1.0);
    }

    Rng rng(123);
    for (int i = 0; i < 1000; ++i) {
        SwitchedSystem sys = random_stable_system(3, Alphabet(1), rng.next_u64());
        double rho = spectral_radius(sys.mode_matrix(1).to_double());
        CHECK(rho < 1.0);
        CHECK(rho > 0.0);
    }
}

TEST_SUITE_END();
