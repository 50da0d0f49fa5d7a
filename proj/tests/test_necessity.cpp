#include <doctest.h>

#include "pcbf/canonical.hpp"
#include "pcbf/necessity.hpp"
#include "test_util.hpp"

using namespace pcbf;

namespace {

bool is_contiguous_subword(const Word& needle, const Word& haystack) {
    if (needle.size() > haystack.size()) return false;
    for (std::size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
        bool match = true;
        for (std::size_t i = 0; i < needle.size(); ++i)
            if (haystack[start + i] != needle[i]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("necessity");

TEST_CASE("shift matrices of the constructed system") {
    auto [sys, spec] = build_unsafe_system(Alphabet(2), {1, 2, 1});
    CHECK(sys.dimension == 4);
    RatMat a1 = sys.mode_matrix(1), a2 = sys.mode_matrix(2);
    RatMat hat1(4, 4), hat2(4, 4);
    hat1(1, 0) = 1;
    hat1(3, 2) = 1;
    hat2(2, 1) = 1;
    CHECK(a1 == hat1 * Rat(2));
    CHECK(a2 == hat2 * Rat(2));
    CHECK(std::get<Ball>(spec.X0).r2 == rat_frac(1, 64));
    CHECK(std::get<BallComplement>(spec.Xu).r2 == 1);

    auto [sys1, spec1] = build_unsafe_system(Alphabet(1), {1});
    CHECK(sys1.dimension == 2);
    RatMat expect(2, 2);
    expect(1, 0) = 2;
    CHECK(sys1.mode_matrix(1) == expect);
    CHECK(std::get<Ball>(spec1.X0).r2 == rat_frac(1, 4));

    CHECK_THROWS_AS(build_unsafe_system(Alphabet(2), {}), std::invalid_argument);
}

TEST_CASE("witness trajectory reaches the last basis vector") {
    Trajectory w3 = witness_violation(Alphabet(2), {1, 2, 1});
    CHECK(w3.states.front() == RatVec{rat_frac(1, 8), 0, 0, 0});
    CHECK(w3.final_state() == RatVec{0, 0, 0, 1});

    Trajectory w1 = witness_violation(Alphabet(1), {1});
    CHECK(w1.states.front() == RatVec{rat_frac(1, 2), 0});
    CHECK(w1.final_state() == RatVec{0, 1});

    // boundary membership of the start point
    auto [sys, spec] = build_unsafe_system(Alphabet(2), {1, 2, 1});
    CHECK(in_region(spec.X0, w3.states.front()));
}

TEST_CASE("auxiliary graph structure for the bundled non-complete graph") {
    LabeledGraph gb = data::graph_b();
    auto [sys, spec] = build_unsafe_system(gb.alphabet(), {1, 2, 1});
    AuxiliaryGraph aux = build_auxiliary_graph(gb, sys);
    CHECK(aux.num_nodes() == 8);

    // longest chain has at most k-1 = 2 edges
    std::vector<std::vector<int>> levels;
    auto coeffs = assign_coefficients(aux, 3, &levels);
    int max_level = 0;
    for (const auto& row : levels)
        for (int a : row) max_level = std::max(max_level, a);
    CHECK(max_level == 3);

    CHECK(coeffs[0] == RatVec{64, 16, 16, 4});
    CHECK(coeffs[1] == RatVec{4, 64, 4, 4});
}

TEST_CASE("edgeless graphs produce sink-only auxiliary graphs") {
    LabeledGraph edgeless(Alphabet(1), 1);
    auto [sys, spec] = build_unsafe_system(edgeless.alphabet(), {1});
    AuxiliaryGraph aux = build_auxiliary_graph(edgeless, sys);
    CHECK(aux.edges.empty());
    auto coeffs = assign_coefficients(aux, 1);
    for (const auto& p : coeffs)
        for (const Rat& c : p) CHECK(c == 4);
}

TEST_CASE("admissibility verdicts") {
    LabeledGraph gb = data::graph_b();
    auto [sys, spec] = build_unsafe_system(gb.alphabet(), {1, 2, 1});
    std::vector<RatVec> good{{64, 16, 16, 4}, {4, 64, 4, 4}};
    auto report = check_admissibility(gb, good, sys, 3);
    CHECK(report.overall);
    for (const auto& row : report.edge_rows) CHECK(row.pass);

    // all-fours fails on any edge whose shifted image is nonzero
    std::vector<RatVec> flat{{4, 4, 4, 4}, {4, 4, 4, 4}};
    auto bad = check_admissibility(gb, flat, sys, 3);
    CHECK_FALSE(bad.overall);

    LabeledGraph edgeless(Alphabet(2), 2);
    auto [esys, espec] = build_unsafe_system(edgeless.alphabet(), {1, 2, 1});
    std::vector<RatVec> any{{4, 4, 4, 4}, {4, 4, 4, 4}};
    CHECK(check_admissibility(edgeless, any, esys, 3).overall);
}

TEST_CASE("pipeline reproduces the bundled regression values") {
    NecessityInstance inst = run_necessity_pipeline(data::graph_b());
    CHECK(inst.word == Word{1, 2, 1});
    CHECK(inst.coefficients[0] == RatVec{64, 16, 16, 4});
    CHECK(inst.coefficients[1] == RatVec{4, 64, 4, 4});
    CHECK(inst.report.overall);
    CHECK(in_region(inst.spec.Xu, inst.witness.final_state()));
    CHECK_THROWS_AS(run_necessity_pipeline(data::graph_a()), GraphIsPathCompleteError);
}

TEST_CASE("pipeline holds on random non-complete graphs") {
    Rng rng(4242);
    int done = 0;
    while (done < 30) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(4), 1 + rng.next_below(3),
                                        0.2 + 0.5 * rng.next_unit());
        if (is_path_complete(g).complete) continue;
        NecessityInstance inst = run_necessity_pipeline(g);
        CHECK(inst.report.overall);
        CHECK(in_region(inst.spec.Xu, inst.witness.final_state()));
        CHECK(static_cast<int>(inst.witness.states.size()) == static_cast<int>(inst.word.size()) + 1);

        // level monotonicity along auxiliary edges: p source >= 4 * p target
        for (const auto& e : inst.aux.edges) {
            CHECK(inst.levels[e.from_vertex][e.from_coord] >=
                  inst.levels[e.to_vertex][e.to_coord] + 1);
            CHECK(inst.coefficients[e.from_vertex][e.from_coord] >=
                  4 * inst.coefficients[e.to_vertex][e.to_coord]);
        }
        ++done;
    }
}

TEST_CASE("products vanish exactly off contiguous subwords") {
    Rng rng(60);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 1 + static_cast<int>(rng.next_below(3));
        int k = 1 + static_cast<int>(rng.next_below(5));
        Word w;
        for (int i = 0; i < k; ++i) w.push_back(1 + static_cast<int>(rng.next_below(m)));
        auto [sys, spec] = build_unsafe_system(Alphabet(m), w);

        // enumerate all words of length 1..k
        std::vector<Word> all{{}};
        for (int len = 1; len <= k; ++len) {
            std::vector<Word> next;
            for (const Word& prefix : all)
                if (static_cast<int>(prefix.size()) == len - 1)
                    for (int s = 1; s <= m; ++s) {
                        Word extended = prefix;
                        extended.push_back(s);
                        next.push_back(extended);
                    }
            for (const Word& word : next) {
                RatMat product = RatMat::identity(sys.dimension);
                for (int s : word) product = sys.mode_matrix(s) * product;
                CHECK((!product.is_zero()) == is_contiguous_subword(word, w));
            }
            all.insert(all.end(), next.begin(), next.end());
        }
    }
}

TEST_SUITE_END();
