#include <doctest.h>

#include "pcbf/canonical.hpp"
#include "pcbf/separation.hpp"
#include "test_util.hpp"

using namespace pcbf;

TEST_SUITE_BEGIN("separation");

TEST_CASE("single vertex without edges: the self-loop case") {
    LabeledGraph g(Alphabet(1), 1);
    SeparationInstance inst = build_separating_instance(g);
    REQUIRE(inst.tilde_edges.size() == 1);
    CHECK(inst.system.dimension == 2);
    CHECK(inst.qcoeffs[0] == RatVec{rat_frac(1, 3), rat_frac(1, 2)});

    SeparationReport report = verify_separation(inst);
    CHECK(report.overall);
    REQUIRE(report.non_edge_rows.size() == 1);
    CHECK(report.non_edge_rows[0].gap == rat_frac(1, 6));
    CHECK(report.edge_rows.empty());
}

TEST_CASE("coefficient cases for incoming/outgoing/unrelated vertices") {
    // v1 --1--> v2 missing, plus assorted company
    LabeledGraph g(Alphabet(1), 3);
    g.add_edge(0, 1, 0);  // keep the self-loop so (v1,1,v1) is a real edge
    SeparationInstance inst = build_separating_instance(g);

    // locate the non-edge (v1,1,v2)
    int idx = -1;
    for (std::size_t t = 0; t < inst.tilde_edges.size(); ++t)
        if (inst.tilde_edges[t].from == 0 && inst.tilde_edges[t].to == 1) idx = static_cast<int>(t);
    REQUIRE(idx >= 0);
    // outgoing from v1, incoming to v2, unrelated to v3
    CHECK(inst.qcoeffs[0][2 * idx] == rat_frac(1, 3));
    CHECK(inst.qcoeffs[0][2 * idx + 1] == rat_frac(1, 3));
    CHECK(inst.qcoeffs[1][2 * idx] == rat_frac(1, 2));
    CHECK(inst.qcoeffs[1][2 * idx + 1] == rat_frac(1, 2));
    CHECK(inst.qcoeffs[2][2 * idx] == rat_frac(1, 2));
    CHECK(inst.qcoeffs[2][2 * idx + 1] == rat_frac(1, 3));
}

TEST_CASE("complete graphs are rejected upstream") {
    LabeledGraph complete(Alphabet(2), 2);
    for (int v = 0; v < 2; ++v)
        for (int s = 1; s <= 2; ++s)
            for (int vp = 0; vp < 2; ++vp) complete.add_edge(v, s, vp);
    CHECK_THROWS_AS(build_separating_instance(complete), EmptyTildeSetError);
}

TEST_CASE("every bundled and random instance verifies with gap 1/6") {
    auto exercise = [](const LabeledGraph& g) {
        SeparationInstance inst = build_separating_instance(g);
        SeparationReport report = verify_separation(inst);
        CHECK(report.overall);
        CHECK(report.non_edge_rows.size() == inst.tilde_edges.size());
        for (const auto& row : report.non_edge_rows) CHECK(row.gap == rat_frac(1, 6));
        for (const auto& row : report.edge_rows) CHECK(row.pass);
        for (const RatVec& q : inst.qcoeffs)
            for (const Rat& value : q) {
                CHECK(value >= rat_frac(1, 3));
                CHECK(value <= 1);
            }
    };

    exercise(data::graph_a());
    exercise(data::graph_b());
    exercise(data::platoon_graph());

    Rng rng(808);
    int done = 0;
    while (done < 60) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(4), 1 + rng.next_below(3),
                                        0.2 + 0.6 * rng.next_unit());
        int total = g.num_vertices() * g.num_vertices() * g.alphabet().m;
        if (static_cast<int>(g.edges().size()) == total) continue;
        exercise(g);
        ++done;
    }
}

TEST_CASE("numeric corroboration of the edge inequality") {
    Rng rng(90210);
    LabeledGraph g = data::platoon_graph();
    SeparationInstance inst = build_separating_instance(g);
    for (const Edge& e : g.edges()) {
        const RatMat& a = inst.system.mode_matrix(e.symbol);
        for (int sample = 0; sample < 50; ++sample) {
            RatVec x(inst.system.dimension);
            for (auto& entry : x) entry = rat_from_double(rng.next_symmetric());
            RatVec image = a * x;
            Rat before(-1), after(-1);
            for (int i = 0; i < inst.system.dimension; ++i) {
                before += inst.qcoeffs[e.from][i] * x[i] * x[i];
                after += inst.qcoeffs[e.to][i] * image[i] * image[i];
            }
            CHECK(after <= before);
        }
    }
}

TEST_CASE("maps sending an edge onto a non-edge are rejected by the witness") {
    // Theorem-3 converse gadget: if (R(v), s, R(v')) is a non-edge of g,
    // the instance's canonical witness violates the decrease condition
    // for the pair (R(v), R(v')).
    Rng rng(31415);
    int done = 0;
    while (done < 40) {
        auto g = testutil::random_graph(rng, 2 + rng.next_below(3), 1 + rng.next_below(2), 0.5);
        int total = g.num_vertices() * g.num_vertices() * g.alphabet().m;
        if (static_cast<int>(g.edges().size()) == total) continue;
        SeparationInstance inst = build_separating_instance(g);

        // pick any non-edge directly
        const Edge& missing = inst.tilde_edges[rng.next_below(inst.tilde_edges.size())];
        int t = -1;
        for (std::size_t i = 0; i < inst.tilde_edges.size(); ++i)
            if (inst.tilde_edges[i].from == missing.from && inst.tilde_edges[i].symbol == missing.symbol &&
                inst.tilde_edges[i].to == missing.to)
                t = static_cast<int>(i);
        RatVec x(inst.system.dimension, Rat(0));
        x[2 * t] = 1;
        RatVec image = inst.system.mode_matrix(missing.symbol) * x;
        Rat before(-1), after(-1);
        for (int i = 0; i < inst.system.dimension; ++i) {
            before += inst.qcoeffs[missing.from][i] * x[i] * x[i];
            after += inst.qcoeffs[missing.to][i] * image[i] * image[i];
        }
        CHECK(after > before);
        ++done;
    }
}

TEST_SUITE_END();
