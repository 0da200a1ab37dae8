#pragma once

#include <string>
#include <vector>

#include "knotcarve/carving.hpp"
#include "knotcarve/subdivide.hpp"

namespace knotcarve {

// A family of pairwise disjoint Jordan curves on the sphere realizing a bond
// carving decomposition, one curve per carving-tree edge.  Curves are stored
// combinatorially: the cyclic list of graph edges each one crosses (the
// simple cycle in the dual graph cut out by the middle set), plus, for every
// graph edge, the order in which the curves cross it from its tail to its
// head.  No coordinates are kept; laminarity is a property of these
// crossing orders within each face.
struct CurveFamily {
    struct Curve {
        int tree_a = 0, tree_b = 0;   // carving-tree edge realized
        std::vector<int> edge_cycle;  // graph edges in dual-cycle order
        std::vector<int> face_cycle;  // face entered after crossing edge_cycle[i]
    };
    std::vector<Curve> curves;
    // crossing_order[e] lists curve indices from tail(e) towards head(e)
    std::vector<std::vector<int>> crossing_order;
};

// Builds the family for a bond carving of an embedded simple diagram graph.
// The order of curves along a shared graph edge (u,v) is the order of their
// tree edges along the carving-tree path from leaf(u) to leaf(v); with
// laminar bipartitions this never makes two chords interleave.  Throws
// errc::unsupported when some middle set is not a simple dual cycle (the
// carving is not bond) and errc::validation on inconsistent input.
CurveFamily realize(const SimpleDiagramGraph& g, const CarvingDecomposition& dec);

struct CurveReport {
    bool ok = true;
    std::vector<std::string> failures;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Independent check of the family: each curve crosses exactly its middle
// set, separates the sphere into the leaf bipartition of its tree edge, and
// within every face the chords of distinct curves do not interleave.
CurveReport validate(const CurveFamily& fam, const SimpleDiagramGraph& g,
                     const CarvingDecomposition& dec);

// carving-tree path between the leaves of u and v, as a list of tree edges
// (pairs), in order from u's leaf
std::vector<std::pair<int, int>> tree_path_edges(const CarvingDecomposition& dec, int u, int v);

}  // namespace knotcarve
