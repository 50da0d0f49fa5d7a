#pragma once

#include <cstdlib>
#include <string>

#include "pcbf/graph.hpp"
#include "pcbf/rng.hpp"

namespace pcbf::testutil {

inline LabeledGraph random_graph(Rng& rng, int num_vertices, int alphabet, double density) {
    LabeledGraph g(Alphabet(alphabet), num_vertices);
    for (int v = 0; v < num_vertices; ++v)
        for (int s = 1; s <= alphabet; ++s)
            for (int vp = 0; vp < num_vertices; ++vp)
                if (rng.next_bool(density)) g.add_edge(v, s, vp);
    return g;
}

inline std::string data_dir() {
    const char* env = std::getenv("PCBF_DATA_DIR");
    return env ? env : "data";
}

}  // namespace pcbf::testutil
