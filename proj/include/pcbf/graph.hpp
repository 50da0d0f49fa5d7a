#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcbf/alphabet.hpp"

namespace pcbf {

/// Labeled edge (v, sigma, v'); vertex ids are 0-based internally,
/// symbols 1-based as in words.
struct Edge {
    int from = 0;
    int symbol = 1;
    int to = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Directed multigraph with alphabet-labeled edges. Vertices carry
/// stable names for file round-trips; algorithms work on indices.
class LabeledGraph {
public:
    LabeledGraph(Alphabet alphabet, std::vector<std::string> vertex_names);
    LabeledGraph(Alphabet alphabet, int num_vertices);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_vertices() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_.at(v); }
    int vertex_index(const std::string& name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int from, int symbol, int to) const;
    /// Duplicate triples are ignored.
    void add_edge(int from, int symbol, int to);

    bool operator==(const LabeledGraph& rhs) const {
        return alphabet_ == rhs.alphabet_ && names_ == rhs.names_ && edges_ == rhs.edges_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;  // kept sorted, unique
};

/// Active-vertex-set transitions of a graph, packed into bitmasks.
/// Supports at most 64 vertices, far beyond this domain's sizes.
class SubsetDynamics {
public:
    explicit SubsetDynamics(const LabeledGraph& g);

    std::uint64_t full_set() const { return full_; }
    std::uint64_t step(std::uint64_t active, int symbol) const;

private:
    int m_;
    std::uint64_t full_;
    std::vector<std::uint64_t> successors_;  // [vertex * m + (symbol-1)]
};

/// True iff some path in the graph, starting at any vertex, is labeled
/// by the word.
bool accepts(const LabeledGraph& g, const Word& w);

struct PathCompletenessResult {
    bool complete = false;
    /// Shortest non-accepted word, lexicographically smallest among
    /// shortest; empty when complete.
    Word rejected;
};

/// Subset-construction universality check from the all-vertices state.
/// BFS expands letters in increasing order, so the first empty subset
/// found yields the canonical rejected word.
PathCompletenessResult is_path_complete(const LabeledGraph& g);

/// Total map R from the vertices of gbar to the vertices of g with
/// (R(v), sigma, R(v')) an edge of g for every edge (v, sigma, v') of gbar.
struct SimulationMap {
    std::vector<int> image;  // indexed by gbar vertex

    int operator()(int vbar) const { return image.at(vbar); }
};

/// True iff the map transports every edge of gbar onto an edge of g.
bool check_simulation(const LabeledGraph& g, const LabeledGraph& gbar, const SimulationMap& map);

/// Searches for a simulation of gbar by g. Backtracking over vertex
/// images in index order with forward checking, so the first complete
/// assignment is minimal in lexicographic order of
/// (R(v1), ..., R(v_k)) and the result is deterministic.
std::optional<SimulationMap> find_simulation(const LabeledGraph& g, const LabeledGraph& gbar);

enum class Ordering {
    LessOrEqual,     // g simulates gbar: certificates on g transport to gbar
    GreaterOrEqual,  // only the reverse simulation exists
    Both,
    Incomparable,
};

struct CompareResult {
    Ordering verdict = Ordering::Incomparable;
    std::optional<SimulationMap> g_simulates_gbar;
    std::optional<SimulationMap> gbar_simulates_g;
};

struct NonPathCompleteError : std::runtime_error {
    NonPathCompleteError(std::string which_graph, Word rejected_word)
        : std::runtime_error("graph '" + which_graph + "' is not path-complete; rejected word " +
                             word_to_string(rejected_word)),
          which(std::move(which_graph)),
          rejected(std::move(rejected_word)) {}

    std::string which;
    Word rejected;
};

/// Ordering verdict for two path-complete graphs over the same alphabet.
/// Throws NonPathCompleteError when either input is not path-complete.
CompareResult compare(const LabeledGraph& g, const LabeledGraph& gbar);

}  // namespace pcbf
