#pragma once

#include <utility>
#include <vector>

#include "knotcarve/graph.hpp"

namespace knotcarve {

// Carving decomposition: an unrooted tree whose internal nodes have degree 3
// and whose leaves are in bijection with the graph vertices.  Removing a
// tree edge splits the vertices in two; the middle set of the edge is the
// set of graph edges joining the two sides, and the width is the largest
// middle set.
struct CarvingDecomposition {
    std::vector<std::vector<int>> nbrs;  // tree adjacency
    std::vector<int> leaf_vertex;        // node -> graph vertex, -1 internal
    std::vector<int> vertex_leaf;        // graph vertex -> leaf node

    int node_count() const { return static_cast<int>(nbrs.size()); }
    int leaf_count() const { return static_cast<int>(vertex_leaf.size()); }

    // tree edges as node pairs (a < b), in a fixed order
    std::vector<std::pair<int, int>> tree_edges() const;

    // graph-vertex side mask of the component containing node a when the
    // edge (a, b) is removed
    std::vector<char> side(int a, int b) const;

    // throws errc::validation if the tree shape or the bijection is broken
    void validate(int graph_vertex_count) const;
};

// middle set of a tree edge: ids of the graph edges crossing the split
std::vector<int> middle_set(const Graph& g, const CarvingDecomposition& dec, int a, int b);

// max middle-set size over the tree edges (0 when the tree has no edge)
int carving_width(const Graph& g, const CarvingDecomposition& dec);

// all middle-set sizes, aligned with tree_edges()
std::vector<int> middle_sizes(const Graph& g, const CarvingDecomposition& dec);

// true iff both sides of every tree edge induce connected subgraphs
bool is_bond(const Graph& g, const CarvingDecomposition& dec);

// Interval for the tree-width implied by carving-width cw on a graph of max
// degree d:  2/3 (tw+1) <= cw <= d (tw+1).
struct WidthBounds {
    int cw = 0;
    int tw_lower = 0;
    int tw_upper = 0;
    int max_degree = 0;
};

WidthBounds tw_bounds_from_cw(int cw, int d);

}  // namespace knotcarve
