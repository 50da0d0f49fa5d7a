#include "pcbf/necessity.hpp"

#include <algorithm>

namespace pcbf {

namespace {

Rat pow4(int exponent) {
    Rat r(1);
    for (int i = 0; i < exponent; ++i) r *= 4;
    return r;
}

RatMat hat_matrix(int n, const Word& w, int symbol) {
    RatMat a(n, n);
    for (int j = 0; j + 1 < n; ++j)
        if (w[j] == symbol) a(j + 1, j) = 1;
    return a;
}

}  // namespace

std::pair<SwitchedSystem, SafetySpec> build_unsafe_system(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) throw std::invalid_argument("build_unsafe_system: empty word");
    validate_word(alphabet, w);
    const int k = static_cast<int>(w.size());
    const int n = k + 1;
    std::vector<ModeDynamics> modes;
    for (int s = 1; s <= alphabet.m; ++s) modes.push_back(LinearMode{hat_matrix(n, w, s) * Rat(2)});
    SwitchedSystem system(n, alphabet, std::move(modes));
    SafetySpec spec{FullSpace{}, Ball{Rat(1) / pow4(k)}, BallComplement{Rat(1)}};
    return {std::move(system), std::move(spec)};
}

Trajectory witness_violation(const Alphabet& alphabet, const Word& w) {
    auto [system, spec] = build_unsafe_system(alphabet, w);
    const int k = static_cast<int>(w.size());
    RatVec x0(system.dimension, Rat(0));
    x0[0] = Rat(1) / Rat(mpz_class(1) << k);  // 2^-k
    if (!in_region(spec.X0, x0)) throw std::logic_error("witness_violation: x0 left X0");
    Trajectory traj = simulate(system, x0, w);
    RatVec expected(system.dimension, Rat(0));
    expected.back() = 1;
    if (traj.final_state() != expected)
        throw std::logic_error("witness_violation: trajectory did not reach the last basis vector");
    return traj;
}

AuxiliaryGraph build_auxiliary_graph(const LabeledGraph& g, const SwitchedSystem& system) {
    AuxiliaryGraph aux;
    aux.num_graph_vertices = g.num_vertices();
    aux.dimension = system.dimension;
    for (const Edge& e : g.edges()) {
        const RatMat& a = system.mode_matrix(e.symbol);
        for (int i = 0; i < aux.dimension; ++i)
            for (int ip = 0; ip < aux.dimension; ++ip)
                if (a(ip, i) != 0)
                    aux.edges.push_back({e.from, i, e.symbol, e.to, ip});
    }

    // Kahn topological pass; a cycle would mean the driving word is
    // actually accepted.
    std::vector<int> indegree(aux.num_nodes(), 0);
    for (const auto& e : aux.edges) ++indegree[aux.node_id(e.to_vertex, e.to_coord)];
    std::vector<int> stack;
    for (int v = 0; v < aux.num_nodes(); ++v)
        if (indegree[v] == 0) stack.push_back(v);
    std::vector<int> longest(aux.num_nodes(), 0);
    int removed = 0;
    // repeated scans keep this simple; sizes are tiny
    std::vector<std::vector<int>> out(aux.num_nodes());
    for (std::size_t i = 0; i < aux.edges.size(); ++i)
        out[aux.node_id(aux.edges[i].from_vertex, aux.edges[i].from_coord)].push_back(static_cast<int>(i));
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int ei : out[v]) {
            int to = aux.node_id(aux.edges[ei].to_vertex, aux.edges[ei].to_coord);
            longest[to] = std::max(longest[to], longest[v] + 1);
            if (--indegree[to] == 0) stack.push_back(to);
        }
    }
    if (removed != aux.num_nodes())
        throw CycleDetectedError("auxiliary graph has a directed cycle; the word must be rejected");
    int k = system.dimension - 1;
    for (int v = 0; v < aux.num_nodes(); ++v)
        if (longest[v] > k - 1)
            throw CycleDetectedError("auxiliary graph path longer than k-1; the word must be rejected");
    return aux;
}

std::vector<RatVec> assign_coefficients(const AuxiliaryGraph& aux, int word_length,
                                        std::vector<std::vector<int>>* levels_out) {
    const int nodes = aux.num_nodes();
    std::vector<std::vector<int>> out(nodes);
    std::vector<int> indegree(nodes, 0);
    for (std::size_t i = 0; i < aux.edges.size(); ++i) {
        const auto& e = aux.edges[i];
        out[aux.node_id(e.from_vertex, e.from_coord)].push_back(aux.node_id(e.to_vertex, e.to_coord));
        ++indegree[aux.node_id(e.to_vertex, e.to_coord)];
    }

    // Reverse topological order, then level = 1 for sinks and
    // 1 + max successor level otherwise.
    std::vector<int> order, stack;
    std::vector<int> indeg = indegree;
    for (int v = 0; v < nodes; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int to : out[v])
            if (--indeg[to] == 0) stack.push_back(to);
    }
    if (static_cast<int>(order.size()) != nodes)
        throw CycleDetectedError("assign_coefficients: cycle in auxiliary graph");

    std::vector<int> level(nodes, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int to : out[v]) level[v] = std::max(level[v], level[to] + 1);
    }

    std::vector<RatVec> coefficients(aux.num_graph_vertices, RatVec(aux.dimension));
    std::vector<std::vector<int>> levels(aux.num_graph_vertices, std::vector<int>(aux.dimension));
    for (int v = 0; v < aux.num_graph_vertices; ++v)
        for (int i = 0; i < aux.dimension; ++i) {
            int a = level[aux.node_id(v, i)];
            if (a < 1 || a > word_length)
                throw std::logic_error("assign_coefficients: level escaped [1, k]");
            levels[v][i] = a;
            coefficients[v][i] = pow4(a);
        }
    if (levels_out) *levels_out = std::move(levels);
    return coefficients;
}

AdmissibilityReport check_admissibility(const LabeledGraph& g, const std::vector<RatVec>& coefficients,
                                        const SwitchedSystem& system, int word_length) {
    if (static_cast<int>(coefficients.size()) != g.num_vertices())
        throw std::invalid_argument("check_admissibility: one coefficient vector per vertex required");
    for (const RatVec& p : coefficients)
        if (static_cast<int>(p.size()) != system.dimension)
            throw std::invalid_argument("check_admissibility: coefficient dimension mismatch");

    AdmissibilityReport report;
    Rat upper = pow4(word_length);
    for (int v = 0; v < g.num_vertices(); ++v) {
        AdmissibilityReport::BoundRow row{v, true, -1};
        for (int i = 0; i < system.dimension; ++i) {
            if (!(coefficients[v][i] > 1 && coefficients[v][i] <= upper)) {
                row.pass = false;
                row.violating_coord = i;
                break;
            }
        }
        report.overall = report.overall && row.pass;
        report.bounds.push_back(row);
    }

    for (const Edge& e : g.edges()) {
        const RatMat hat = system.mode_matrix(e.symbol) * rat_frac(1, 2);
        RatVec mapped = hat.transpose() * coefficients[e.to];
        AdmissibilityReport::EdgeRow row{e, true, -1, Rat(0), Rat(0)};
        for (int i = 0; i < system.dimension; ++i) {
            Rat lhs = 4 * mapped[i];
            if (lhs > coefficients[e.from][i]) {
                row.pass = false;
                row.violating_coord = i;
                row.lhs = lhs;
                row.rhs = coefficients[e.from][i];
                break;
            }
        }
        report.overall = report.overall && row.pass;
        report.edge_rows.push_back(row);
    }
    return report;
}

NecessityInstance run_necessity_pipeline(const LabeledGraph& g) {
    PathCompletenessResult pc = is_path_complete(g);
    if (pc.complete)
        throw GraphIsPathCompleteError("run_necessity_pipeline: graph is path-complete");
    const Word& w = pc.rejected;
    const int k = static_cast<int>(w.size());

    auto [system, spec] = build_unsafe_system(g.alphabet(), w);
    Trajectory witness = witness_violation(g.alphabet(), w);
    if (!in_region(spec.Xu, witness.final_state()))
        throw std::logic_error("run_necessity_pipeline: witness missed the unsafe set");

    AuxiliaryGraph aux = build_auxiliary_graph(g, system);
    std::vector<std::vector<int>> levels;
    std::vector<RatVec> coefficients = assign_coefficients(aux, k, &levels);
    AdmissibilityReport report = check_admissibility(g, coefficients, system, k);
    if (!report.overall)
        throw std::logic_error("run_necessity_pipeline: constructed barrier failed admissibility");

    return NecessityInstance{g,   w,      std::move(system),       std::move(spec), std::move(aux),
                             std::move(levels), std::move(coefficients), std::move(witness), std::move(report)};
}

}  // namespace pcbf
