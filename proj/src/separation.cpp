#include "pcbf/separation.hpp"

namespace pcbf {

namespace {

Rat barrier_value(const RatVec& q, const RatVec& x) {
    Rat acc(0);
    for (std::size_t i = 0; i < q.size(); ++i) acc += q[i] * x[i] * x[i];
    return acc - 1;
}

}  // namespace

SeparationInstance build_separating_instance(const LabeledGraph& g) {
    const int nv = g.num_vertices();
    const int m = g.alphabet().m;

    std::vector<Edge> tilde;
    for (int v = 0; v < nv; ++v)
        for (int s = 1; s <= m; ++s)
            for (int vp = 0; vp < nv; ++vp)
                if (!g.has_edge(v, s, vp)) tilde.push_back({v, s, vp});
    if (tilde.empty())
        throw EmptyTildeSetError("build_separating_instance: complete graph has no non-edges");

    const int n = 2 * static_cast<int>(tilde.size());
    std::vector<ModeDynamics> modes;
    for (int s = 1; s <= m; ++s) {
        RatMat a(n, n);
        for (std::size_t e = 0; e < tilde.size(); ++e)
            if (tilde[e].symbol == s) a(2 * e + 1, 2 * e) = 1;  // block [[0,0],[1,0]]
        modes.push_back(LinearMode{std::move(a)});
    }
    SwitchedSystem system(n, g.alphabet(), std::move(modes));
    SafetySpec spec{FullSpace{}, Ball{Rat(1)}, BallComplement{Rat(3)}};

    const Rat third = rat_frac(1, 3), half = rat_frac(1, 2);
    std::vector<RatVec> qcoeffs(nv, RatVec(n));
    for (int v = 0; v < nv; ++v) {
        for (std::size_t e = 0; e < tilde.size(); ++e) {
            const Edge& t = tilde[e];
            Rat first, second;
            if (v == t.from && v == t.to) {  // self-loop at v
                first = third;
                second = half;
            } else if (v == t.from) {  // outgoing from v
                first = third;
                second = third;
            } else if (v == t.to) {  // incoming to v
                first = half;
                second = half;
            } else {
                first = half;
                second = third;
            }
            qcoeffs[v][2 * e] = first;
            qcoeffs[v][2 * e + 1] = second;
        }
    }
    return SeparationInstance{g, std::move(tilde), std::move(system), std::move(spec), std::move(qcoeffs)};
}

SeparationReport verify_separation(const SeparationInstance& inst) {
    SeparationReport report;
    const Rat expected_gap = rat_frac(1, 6);

    for (const Edge& e : inst.graph.edges()) {
        for (std::size_t t = 0; t < inst.tilde_edges.size(); ++t) {
            if (inst.tilde_edges[t].symbol != e.symbol) continue;
            SeparationReport::EdgeRow row;
            row.edge = e;
            row.tilde = static_cast<int>(t);
            row.lhs = inst.qcoeffs[e.to][2 * t + 1];
            row.rhs = inst.qcoeffs[e.from][2 * t];
            row.pass = row.lhs <= row.rhs;
            report.overall = report.overall && row.pass;
            report.edge_rows.push_back(std::move(row));
        }
    }

    for (std::size_t t = 0; t < inst.tilde_edges.size(); ++t) {
        const Edge& e = inst.tilde_edges[t];
        SeparationReport::NonEdgeRow row;
        row.non_edge = e;
        row.tilde = static_cast<int>(t);
        row.witness = RatVec(inst.system.dimension, Rat(0));
        row.witness[2 * t] = 1;  // canonical witness e_{2t} hits the block's lower-left entry
        RatVec image = inst.system.mode_matrix(e.symbol) * row.witness;
        row.gap = barrier_value(inst.qcoeffs[e.to], image) - barrier_value(inst.qcoeffs[e.from], row.witness);
        row.pass = (row.gap == expected_gap);
        report.overall = report.overall && row.pass;
        report.non_edge_rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace pcbf
