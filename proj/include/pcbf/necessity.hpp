#pragma once

#include <map>

#include "pcbf/graph.hpp"
#include "pcbf/system.hpp"

namespace pcbf {

/// Node set {(v, i)} over graph vertices and state coordinates; an edge
/// ((v,i), sigma, (v',i')) exists iff (v, sigma, v') is a graph edge and
/// A_sigma[i', i] is nonzero. Acyclic with short paths whenever the
/// driving word is rejected by the graph.
struct AuxiliaryGraph {
    int num_graph_vertices = 0;
    int dimension = 0;  // coordinates per vertex

    struct AuxEdge {
        int from_vertex, from_coord;
        int symbol;
        int to_vertex, to_coord;
    };
    std::vector<AuxEdge> edges;

    int num_nodes() const { return num_graph_vertices * dimension; }
    int node_id(int vertex, int coord) const { return vertex * dimension + coord; }
};

struct CycleDetectedError : std::logic_error {
    using std::logic_error::logic_error;
};

struct GraphIsPathCompleteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Per-edge exact verification of the coefficient inequality
/// 4 * Ahat_sigma^T p_{v'} <= p_v plus the bound 1 < p_v[i] <= 4^k.
struct AdmissibilityReport {
    struct BoundRow {
        int vertex = 0;
        bool pass = true;
        int violating_coord = -1;
    };
    struct EdgeRow {
        Edge edge;
        bool pass = true;
        int violating_coord = -1;
        Rat lhs, rhs;  // populated at the violating coordinate
    };
    std::vector<BoundRow> bounds;
    std::vector<EdgeRow> edge_rows;
    bool overall = true;
};

/// Everything Theorem 2 builds from one non-path-complete graph: the
/// unsafe linear system, its safety spec, an exact violation witness,
/// and an exactly admissible graph-based barrier.
struct NecessityInstance {
    LabeledGraph graph;
    Word word;  // rejected word driving the construction
    SwitchedSystem system;
    SafetySpec spec;
    AuxiliaryGraph aux;
    std::vector<std::vector<int>> levels;  // [vertex][coord] exponent a
    std::vector<RatVec> coefficients;      // [vertex] -> p_v, entries 4^a
    Trajectory witness;
    AdmissibilityReport report;
};

/// System of dimension |w|+1 with modes 2*Ahat_sigma, initial ball of
/// squared radius 4^-k and unsafe complement at radius 1.
std::pair<SwitchedSystem, SafetySpec> build_unsafe_system(const Alphabet& alphabet, const Word& w);

/// Exact trajectory from [2^-k, 0, ..., 0] under w; reaches the last
/// canonical basis vector at time k.
Trajectory witness_violation(const Alphabet& alphabet, const Word& w);

AuxiliaryGraph build_auxiliary_graph(const LabeledGraph& g, const SwitchedSystem& system);

/// Longest-path levels: sinks get a = 1, other nodes 1 + max over
/// successors; coefficients are p_v[i] = 4^a.
std::vector<RatVec> assign_coefficients(const AuxiliaryGraph& aux, int word_length,
                                        std::vector<std::vector<int>>* levels_out = nullptr);

AdmissibilityReport check_admissibility(const LabeledGraph& g, const std::vector<RatVec>& coefficients,
                                        const SwitchedSystem& system, int word_length);

/// Full Theorem-2 pipeline. Throws GraphIsPathCompleteError when the
/// input graph accepts every word.
NecessityInstance run_necessity_pipeline(const LabeledGraph& g);

}  // namespace pcbf
