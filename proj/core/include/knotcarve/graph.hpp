#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace knotcarve {

// Plain undirected graph (no embedding).  Multi-edges are representable but
// the width solvers require simple input.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int u, int v) { edges.push_back({u, v}); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const;  // neighbour lists
    std::vector<int> degrees() const;
    int max_degree() const;

    bool is_simple() const;
    bool connected() const;
    bool has_bridge() const;
    // true when connected, loop-free and without cut vertices (n <= 2: false
    // unless a single edge... we follow the usual convention: n >= 3 required)
    bool biconnected() const;

    // number of edges with exactly one endpoint in `side`
    int cut_size(const std::vector<char>& side) const;
};

// All connected simple graphs on n vertices, one representative per
// isomorphism class, as adjacency bitmasks over vertex pairs.  Used by the
// exhaustive width censuses; counts for n = 1..7 are
// 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> connected_graph_census(int n);

}  // namespace knotcarve
