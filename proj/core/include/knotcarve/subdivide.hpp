#pragma once

#include <vector>

#include "knotcarve/diagram.hpp"
#include "knotcarve/graph.hpp"

namespace knotcarve {

// The diagram's underlying multigraph subdivided until simple, keeping the
// embedding.  Self-loops gain two interior vertices, every parallel class of
// m edges gains one interior vertex on m-1 of its members; nothing else is
// touched, so the number of added vertices is minimal.
struct SimpleDiagramGraph {
    PlanarMap map;  // simple, embedded

    // per simple vertex: the diagram vertex it came from, or -1 for an added
    // subdivision point (then source_edge says which diagram edge carries it)
    std::vector<int> source_vertex;
    std::vector<int> source_edge;
    // per simple edge: the diagram edge whose segment it is
    std::vector<int> edge_source;
    // per simple vertex: 4 at original crossings, 2 otherwise
    std::vector<int> degree;

    int added_vertices = 0;

    // sweep position used by the order-based carving heuristics: original
    // vertices keep their index, interior points sit between their edge's
    // endpoints
    std::vector<double> sweep_key;

    Graph to_graph() const;
    std::vector<int> sweep_order() const;

    // true iff the simple vertex came from a diagram crossing
    bool is_crossing_vertex(int v, const Diagram& d) const;
};

SimpleDiagramGraph subdivide_to_simple(const Diagram& d);

// Collapses all degree-2 vertices of g back into long edges and returns the
// resulting multigraph on the original diagram vertices as (endpoint pairs).
// Used to check that subdivision is inverse to contraction.
std::vector<std::pair<int, int>> contract_degree_two(const SimpleDiagramGraph& g);

// Planar dual with edge correspondence (edge ids are shared with g.map).
PlanarMap dual_graph(const SimpleDiagramGraph& g);

}  // namespace knotcarve
