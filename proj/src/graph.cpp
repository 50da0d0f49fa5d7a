#include "pcbf/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace pcbf {

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> vertex_names)
    : alphabet_(alphabet), names_(std::move(vertex_names)) {
    if (names_.empty()) throw std::invalid_argument("LabeledGraph: need at least one vertex");
    if (names_.size() > 64) throw std::invalid_argument("LabeledGraph: more than 64 vertices unsupported");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("LabeledGraph: duplicate vertex name '" + names_[i] + "'");
}

LabeledGraph::LabeledGraph(Alphabet alphabet, int num_vertices)
    : LabeledGraph(alphabet, [num_vertices] {
          std::vector<std::string> names;
          for (int i = 0; i < num_vertices; ++i) names.push_back("v" + std::to_string(i + 1));
          return names;
      }()) {}

int LabeledGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    throw std::out_of_range("LabeledGraph: unknown vertex '" + name + "'");
}

bool LabeledGraph::has_edge(int from, int symbol, int to) const {
    Edge e{from, symbol, to};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void LabeledGraph::add_edge(int from, int symbol, int to) {
    if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices())
        throw std::out_of_range("LabeledGraph: edge endpoint out of range");
    if (!alphabet_.contains(symbol))
        throw std::out_of_range("LabeledGraph: edge label outside alphabet");
    Edge e{from, symbol, to};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
}

SubsetDynamics::SubsetDynamics(const LabeledGraph& g)
    : m_(g.alphabet().m), successors_(static_cast<std::size_t>(g.num_vertices()) * m_, 0) {
    int n = g.num_vertices();
    full_ = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    for (const Edge& e : g.edges())
        successors_[static_cast<std::size_t>(e.from) * m_ + (e.symbol - 1)] |= 1ULL << e.to;
}

std::uint64_t SubsetDynamics::step(std::uint64_t active, int symbol) const {
    std::uint64_t next = 0;
    while (active) {
        int v = __builtin_ctzll(active);
        active &= active - 1;
        next |= successors_[static_cast<std::size_t>(v) * m_ + (symbol - 1)];
    }
    return next;
}

bool accepts(const LabeledGraph& g, const Word& w) {
    validate_word(g.alphabet(), w);
    SubsetDynamics dyn(g);
    std::uint64_t active = dyn.full_set();
    for (int symbol : w) {
        active = dyn.step(active, symbol);
        if (!active) return false;
    }
    return active != 0;
}

PathCompletenessResult is_path_complete(const LabeledGraph& g) {
    SubsetDynamics dyn(g);
    const int m = g.alphabet().m;
    std::uint64_t start = dyn.full_set();

    // BFS over reachable vertex subsets; parent links reconstruct the
    // word that reached the empty subset.
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
    std::queue<std::uint64_t> queue;
    parent.emplace(start, std::make_pair(start, 0));
    queue.push(start);
    while (!queue.empty()) {
        std::uint64_t active = queue.front();
        queue.pop();
        for (int symbol = 1; symbol <= m; ++symbol) {
            std::uint64_t next = dyn.step(active, symbol);
            if (next == 0) {
                Word rejected{symbol};
                for (std::uint64_t s = active; s != start;) {
                    auto [prev, letter] = parent.at(s);
                    rejected.push_back(letter);
                    s = prev;
                }
                std::reverse(rejected.begin(), rejected.end());
                return {false, std::move(rejected)};
            }
            if (parent.emplace(next, std::make_pair(active, symbol)).second) queue.push(next);
        }
    }
    return {true, {}};
}

bool check_simulation(const LabeledGraph& g, const LabeledGraph& gbar, const SimulationMap& map) {
    if (g.alphabet().m != gbar.alphabet().m) return false;
    if (static_cast<int>(map.image.size()) != gbar.num_vertices()) return false;
    for (int v : map.image)
        if (v < 0 || v >= g.num_vertices()) return false;
    for (const Edge& e : gbar.edges())
        if (!g.has_edge(map(e.from), e.symbol, map(e.to))) return false;
    return true;
}

namespace {

struct SimulationSearch {
    const LabeledGraph& g;
    const LabeledGraph& gbar;
    int n;     // |V| of g
    int nbar;  // |V| of gbar
    // Per symbol: allowed image sets for edge constraints.
    // out_allowed[sigma-1][v] = {v' : (v, sigma, v') in E}
    // in_allowed[sigma-1][v'] = {v : (v, sigma, v') in E}
    std::vector<std::vector<std::uint64_t>> out_allowed, in_allowed;
    std::vector<std::vector<int>> bar_out, bar_in;  // adjacency of gbar by vertex
    std::vector<int> assignment;

    explicit SimulationSearch(const LabeledGraph& g_, const LabeledGraph& gbar_)
        : g(g_), gbar(gbar_), n(g.num_vertices()), nbar(gbar.num_vertices()) {
        int m = g.alphabet().m;
        out_allowed.assign(m, std::vector<std::uint64_t>(n, 0));
        in_allowed.assign(m, std::vector<std::uint64_t>(n, 0));
        for (const Edge& e : g.edges()) {
            out_allowed[e.symbol - 1][e.from] |= 1ULL << e.to;
            in_allowed[e.symbol - 1][e.to] |= 1ULL << e.from;
        }
        bar_out.assign(nbar, {});
        bar_in.assign(nbar, {});
        for (std::size_t i = 0; i < gbar.edges().size(); ++i) {
            const Edge& e = gbar.edges()[i];
            bar_out[e.from].push_back(static_cast<int>(i));
            bar_in[e.to].push_back(static_cast<int>(i));
        }
        assignment.assign(nbar, -1);
    }

    bool extend(int vbar, std::vector<std::uint64_t> candidates) {
        if (vbar == nbar) return true;
        std::uint64_t options = candidates[vbar];
        while (options) {
            int v = __builtin_ctzll(options);
            options &= options - 1;
            // Self-loops constrain the vertex against itself.
            bool ok = true;
            for (int ei : bar_out[vbar]) {
                const Edge& e = gbar.edges()[ei];
                if (e.to == vbar && !g.has_edge(v, e.symbol, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto next = candidates;
            assignment[vbar] = v;
            for (int ei : bar_out[vbar]) {
                const Edge& e = gbar.edges()[ei];
                if (e.to == vbar) continue;
                std::uint64_t allowed = out_allowed[e.symbol - 1][v];
                if (e.to > vbar) {
                    next[e.to] &= allowed;
                    if (!next[e.to]) ok = false;
                } else if (!(allowed >> assignment[e.to] & 1ULL)) {
                    ok = false;
                }
                if (!ok) break;
            }
            if (ok) {
                for (int ei : bar_in[vbar]) {
                    const Edge& e = gbar.edges()[ei];
                    if (e.from == vbar) continue;
                    std::uint64_t allowed = in_allowed[e.symbol - 1][v];
                    if (e.from > vbar) {
                        next[e.from] &= allowed;
                        if (!next[e.from]) ok = false;
                    } else if (!(allowed >> assignment[e.from] & 1ULL)) {
                        ok = false;
                    }
                    if (!ok) break;
                }
            }
            if (ok && extend(vbar + 1, std::move(next))) return true;
            assignment[vbar] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<SimulationMap> find_simulation(const LabeledGraph& g, const LabeledGraph& gbar) {
    if (g.alphabet().m != gbar.alphabet().m)
        throw std::invalid_argument("find_simulation: alphabet mismatch");
    SimulationSearch search(g, gbar);
    std::uint64_t all = (g.num_vertices() == 64) ? ~0ULL : ((1ULL << g.num_vertices()) - 1);
    std::vector<std::uint64_t> candidates(gbar.num_vertices(), all);
    if (!search.extend(0, std::move(candidates))) return std::nullopt;
    SimulationMap map{search.assignment};
    return map;
}

CompareResult compare(const LabeledGraph& g, const LabeledGraph& gbar) {
    if (g.alphabet().m != gbar.alphabet().m)
        throw std::invalid_argument("compare: alphabet mismatch");
    if (auto pc = is_path_complete(g); !pc.complete) throw NonPathCompleteError("G", pc.rejected);
    if (auto pc = is_path_complete(gbar); !pc.complete) throw NonPathCompleteError("Gbar", pc.rejected);

    CompareResult result;
    result.g_simulates_gbar = find_simulation(g, gbar);
    result.gbar_simulates_g = find_simulation(gbar, g);
    if (result.g_simulates_gbar && result.gbar_simulates_g)
        result.verdict = Ordering::Both;
    else if (result.g_simulates_gbar)
        result.verdict = Ordering::LessOrEqual;
    else if (result.gbar_simulates_g)
        result.verdict = Ordering::GreaterOrEqual;
    else
        result.verdict = Ordering::Incomparable;
    return result;
}

}  // namespace pcbf
