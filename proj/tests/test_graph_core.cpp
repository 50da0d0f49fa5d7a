#include <doctest.h>

#include "pcbf/canonical.hpp"
#include "pcbf/graph.hpp"
#include "test_util.hpp"

using namespace pcbf;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("acceptance on the bundled two-node graphs") {
    LabeledGraph ga = data::graph_a();
    CHECK(accepts(ga, {1, 2, 1}));
    CHECK(accepts(ga, {}));

    // dropping (v2,1,v1) leaves no 1-successor after a 2
    LabeledGraph dropped(Alphabet(2), std::vector<std::string>{"v1", "v2"});
    dropped.add_edge(0, 1, 0);
    dropped.add_edge(0, 2, 1);
    dropped.add_edge(1, 2, 1);
    CHECK_FALSE(accepts(dropped, {1, 2, 1}));

    CHECK_FALSE(accepts(data::graph_b(), {1, 2, 1}));
    CHECK_THROWS_AS(accepts(ga, {1, 3}), std::out_of_range);
}

TEST_CASE("path-completeness verdicts") {
    CHECK(is_path_complete(data::graph_a()).complete);
    CHECK(is_path_complete(data::graph_abar()).complete);
    CHECK(is_path_complete(data::platoon_graph()).complete);
    CHECK(is_path_complete(data::platoon_graph_bar()).complete);

    auto r = is_path_complete(data::graph_b());
    CHECK_FALSE(r.complete);
    CHECK(r.rejected == Word{1, 2, 1});

    auto broken = is_path_complete(data::platoon_graph_nonpc());
    CHECK_FALSE(broken.complete);
    CHECK(broken.rejected == Word{2, 1});

    LabeledGraph edgeless(Alphabet(1), 1);
    auto e = is_path_complete(edgeless);
    CHECK_FALSE(e.complete);
    CHECK(e.rejected == Word{1});
}

TEST_CASE("rejected word invariants: prefixes accepted, word not") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(4), 1 + rng.next_below(3),
                                        0.15 + 0.5 * rng.next_unit());
        auto r = is_path_complete(g);
        if (r.complete) continue;
        CHECK_FALSE(accepts(g, r.rejected));
        Word prefix;
        for (std::size_t i = 0; i + 1 < r.rejected.size(); ++i) {
            prefix.push_back(r.rejected[i]);
            CHECK(accepts(g, prefix));
        }
    }
}

TEST_CASE("rejection is closed under extension") {
    Rng rng(7);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(4), 1 + rng.next_below(2), 0.4);
        auto r = is_path_complete(g);
        if (r.complete) continue;
        for (int s = 1; s <= g.alphabet().m; ++s) {
            Word extended = r.rejected;
            extended.push_back(s);
            CHECK_FALSE(accepts(g, extended));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("completeness matches bounded word enumeration on small graphs") {
    // spot check; the acceptance suite runs the exhaustive sweep
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 1 + static_cast<int>(rng.next_below(3));
        auto g = testutil::random_graph(rng, nv, 2, 0.5);
        auto r = is_path_complete(g);
        int bound = 1 << nv;
        bool all_accepted = true;
        Word w;
        // depth-first enumeration of words up to the bound
        std::vector<int> stack{0};
        while (!stack.empty() && all_accepted) {
            int& top = stack.back();
            if (++top > 2) {
                stack.pop_back();
                if (!w.empty()) w.pop_back();
                continue;
            }
            w.push_back(top);
            if (!accepts(g, w)) all_accepted = false;
            if (static_cast<int>(w.size()) < bound)
                stack.push_back(0);
            else
                w.pop_back();
        }
        CHECK(r.complete == all_accepted);
    }
}

TEST_CASE("simulation of the bundled three-node graphs") {
    auto map = find_simulation(data::graph_a(), data::graph_abar());
    REQUIRE(map.has_value());
    CHECK(map->image == std::vector<int>{0, 1, 0});
    CHECK(check_simulation(data::graph_a(), data::graph_abar(), *map));

    auto map2 = find_simulation(data::platoon_graph(), data::platoon_graph_bar());
    REQUIRE(map2.has_value());
    CHECK(map2->image == std::vector<int>{0, 1, 0});
}

TEST_CASE("identity and constant simulations") {
    auto g = data::graph_a();
    auto self_map = find_simulation(g, g);
    REQUIRE(self_map.has_value());
    CHECK(check_simulation(g, g, *self_map));

    LabeledGraph hub(Alphabet(2), 1);
    hub.add_edge(0, 1, 0);
    hub.add_edge(0, 2, 0);
    auto constant = find_simulation(hub, data::graph_abar());
    REQUIRE(constant.has_value());
    CHECK(constant->image == std::vector<int>{0, 0, 0});
}

TEST_CASE("every graph simulates its edge-subgraphs via the identity") {
    Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(4), 1 + rng.next_below(2), 0.5);
        LabeledGraph sub(g.alphabet(), g.vertex_names());
        for (const Edge& e : g.edges())
            if (rng.next_bool(0.6)) sub.add_edge(e.from, e.symbol, e.to);

        SimulationMap identity;
        for (int v = 0; v < g.num_vertices(); ++v) identity.image.push_back(v);
        CHECK(check_simulation(g, sub, identity));
        CHECK(find_simulation(g, sub).has_value());
    }
}

TEST_CASE("returned simulation maps satisfy the edge condition") {
    Rng rng(31337);
    int found = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto g = testutil::random_graph(rng, 1 + rng.next_below(3), 2, 0.7);
        auto gbar = testutil::random_graph(rng, 1 + rng.next_below(3), 2, 0.3);
        auto map = find_simulation(g, gbar);
        if (!map) continue;
        CHECK(check_simulation(g, gbar, *map));
        ++found;
    }
    CHECK(found > 10);
}

TEST_CASE("compare orders the bundled pairs") {
    auto r = compare(data::graph_a(), data::graph_abar());
    CHECK(r.verdict == Ordering::LessOrEqual);
    REQUIRE(r.g_simulates_gbar.has_value());
    CHECK(r.g_simulates_gbar->image == std::vector<int>{0, 1, 0});

    auto self = compare(data::graph_a(), data::graph_a());
    CHECK(self.verdict == Ordering::Both);

    auto platoon = compare(data::platoon_graph(), data::platoon_graph_bar());
    CHECK(platoon.verdict == Ordering::LessOrEqual);
    REQUIRE(platoon.g_simulates_gbar.has_value());
    CHECK(platoon.g_simulates_gbar->image == std::vector<int>{0, 1, 0});

    auto swapped = compare(data::graph_abar(), data::graph_a());
    CHECK(swapped.verdict == Ordering::GreaterOrEqual);

    CHECK_THROWS_AS(compare(data::graph_b(), data::graph_a()), NonPathCompleteError);
}

TEST_SUITE_END();
