#include "pcbf/canonical.hpp"

namespace pcbf::data {

namespace {

LabeledGraph two_node(std::initializer_list<Edge> edges) {
    LabeledGraph g(Alphabet(2), std::vector<std::string>{"v1", "v2"});
    for (const Edge& e : edges) g.add_edge(e.from, e.symbol, e.to);
    return g;
}

LabeledGraph three_node(std::initializer_list<Edge> edges) {
    LabeledGraph g(Alphabet(2), std::vector<std::string>{"v1", "v2", "v3"});
    for (const Edge& e : edges) g.add_edge(e.from, e.symbol, e.to);
    return g;
}

Poly platoon_coordinate(std::initializer_list<std::pair<Poly::Exponents, const char*>> terms) {
    Poly p(2);
    for (const auto& [e, c] : terms) p.add_term(e, parse_rational(c));
    return p;
}

}  // namespace

LabeledGraph graph_a() {
    return two_node({{0, 1, 0}, {0, 2, 1}, {1, 2, 1}, {1, 1, 0}});
}

LabeledGraph graph_b() {
    return two_node({{0, 1, 0}, {0, 2, 1}, {1, 2, 1}, {1, 2, 0}});
}

LabeledGraph graph_abar() {
    return three_node({{0, 1, 0}, {0, 2, 1}, {1, 2, 1}, {1, 1, 2}, {2, 1, 0}, {2, 2, 1}});
}

LabeledGraph platoon_graph() {
    return two_node({{0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 0}});
}

LabeledGraph platoon_graph_nonpc() {
    return two_node({{0, 1, 0}, {0, 1, 1}, {0, 2, 1}});
}

LabeledGraph platoon_graph_bar() {
    return three_node(
        {{0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 2}, {2, 1, 0}, {2, 1, 1}, {2, 2, 1}});
}

SwitchedSystem platoon_system() {
    // follower: x1 <- 0.9 x1 - 0.02 x1^2 (+ 0.01 x2 while linked)
    // leader:   x2 <- 2 + 0.8 x2 - 0.04 x2^2
    Poly f1_1 = platoon_coordinate({{{1, 0}, "0.9"}, {{2, 0}, "-0.02"}, {{0, 1}, "0.01"}});
    Poly f1_2 = platoon_coordinate({{{0, 0}, "2"}, {{0, 1}, "0.8"}, {{0, 2}, "-0.04"}});
    Poly f2_1 = platoon_coordinate({{{1, 0}, "0.9"}, {{2, 0}, "-0.02"}});
    Poly f2_2 = f1_2;
    return SwitchedSystem(2, Alphabet(2),
                          {PolyMode{{f1_1, f1_2}}, PolyMode{{f2_1, f2_2}}});
}

SwitchedSystem platoon_system_modified() {
    Poly f1_1 = platoon_coordinate({{{1, 0}, "0.9"}, {{2, 0}, "-0.02"}, {{0, 1}, "0.01"}});
    Poly f1_2 = platoon_coordinate({{{0, 0}, "2"}, {{0, 1}, "0.8"}, {{0, 2}, "-0.04"}});
    Poly f2_1 = platoon_coordinate({{{1, 0}, "0.9"}, {{2, 0}, "-0.02"}});
    Poly f2_2 = platoon_coordinate({{{0, 1}, "0.8"}, {{0, 2}, "-0.04"}});
    return SwitchedSystem(2, Alphabet(2),
                          {PolyMode{{f1_1, f1_2}}, PolyMode{{f2_1, f2_2}}});
}

SafetySpec platoon_spec() {
    // a1*x1 + a2*x2 + c >= 0
    auto affine = [](const char* a1, const char* a2, const char* c) {
        return platoon_coordinate({{{1, 0}, a1}, {{0, 1}, a2}, {{0, 0}, c}});
    };
    // 0 <= x1 <= hi1, 0 <= x2 <= hi2
    auto box = [&](const char* hi1, const char* hi2) {
        return std::vector<Poly>{affine("1", "0", "0"), affine("-1", "0", hi1),
                                 affine("0", "1", "0"), affine("0", "-1", hi2)};
    };

    SemiAlgebraic X{box("10", "10")};

    SemiAlgebraic X0{box("3", "10")};
    // 1 <= x2 - x1 <= 2
    X0.ineqs.push_back(affine("-1", "1", "-1"));
    X0.ineqs.push_back(affine("1", "-1", "2"));

    SemiAlgebraic Xu{box("10", "10")};
    // x2 - x1 <= 0.2
    Xu.ineqs.push_back(affine("1", "-1", "0.2"));

    return SafetySpec{Region{X}, Region{X0}, Region{Xu}};
}

SafetySpec experiment_spec() {
    return SafetySpec{FullSpace{}, Ball{Rat(4)}, BallComplement{Rat(9)}};
}

}  // namespace pcbf::data
