#pragma once

#include "pcbf/graph.hpp"
#include "pcbf/system.hpp"

namespace pcbf {

struct EmptyTildeSetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Gadget separating a graph's edges from its non-edges: a block
/// system and diagonal quadratic family whose decrease condition holds
/// exactly on every edge and fails, with gap 1/6, on every non-edge.
struct SeparationInstance {
    LabeledGraph graph;
    std::vector<Edge> tilde_edges;  // (V x Sigma x V) \ E, lexicographic order
    SwitchedSystem system;          // dimension 2 * |tilde_edges|, block-diagonal modes
    SafetySpec spec;                // X0 ball 1, Xu complement at 3
    std::vector<RatVec> qcoeffs;    // [vertex] -> q_v, entries in {1/3, 1/2}
};

struct SeparationReport {
    struct EdgeRow {
        Edge edge;       // graph edge being certified
        int tilde = -1;  // index of the like-labeled non-edge checked
        bool pass = true;
        Rat lhs, rhs;  // q_{v'}[2e+1] <= q_v[2e]
    };
    struct NonEdgeRow {
        Edge non_edge;
        int tilde = -1;
        bool pass = true;  // violation with the exact 1/6 gap is the expected outcome
        Rat gap;           // B_{v'}(A_sigma x) - B_v(x) at the canonical witness
        RatVec witness;
    };
    std::vector<EdgeRow> edge_rows;
    std::vector<NonEdgeRow> non_edge_rows;
    bool overall = true;
};

/// Builds the construction; the complete graph has no non-edges and is
/// rejected.
SeparationInstance build_separating_instance(const LabeledGraph& g);

/// Exact verification: every edge satisfies the componentwise decrease
/// inequality, every non-edge is violated by the canonical witness
/// with gap exactly 1/6. Reports, never throws.
SeparationReport verify_separation(const SeparationInstance& inst);

}  // namespace pcbf
