#pragma once

#include <optional>

#include "knotcarve/carving.hpp"

namespace knotcarve {

struct ExactCarving {
    int width = 0;
    CarvingDecomposition dec;
};

// Exact carving-width by dynamic programming over vertex subsets: the value
// of a subset S is max(cut(S), best split of S), memoised for all 2^n
// subsets, so the optimum over all leaf-labelled binary trees is found in
// O(3^n).  Ties between optimal splits go to the smallest submask, which
// makes the witness deterministic.
//
// bond_only restricts every subset in the tree to induce a connected
// subgraph with a connected complement.  Such decompositions exist exactly
// when the graph is 2-connected (a cut vertex leaves some leaf complement
// disconnected); by Seymour--Thomas the restriction then costs nothing.
//
// Throws errc::solver_cap when n exceeds `cap`, errc::unsupported when
// bond_only is set on a graph with a bridge or cut vertex.
ExactCarving exact_carving_width(const Graph& g, bool bond_only, int cap = 16, int threads = 1);

// Caterpillar decomposition over a vertex order: internal spine in order,
// width = max over prefix cuts and vertex degrees.
CarvingDecomposition caterpillar_carving(const Graph& g, const std::vector<int>& order);

// Carving tree mirroring a BFS spanning tree of g; on a tree input the
// width never exceeds the maximum degree.
CarvingDecomposition spanning_tree_carving(const Graph& g);

// Upper-bound provider: best of the order-based caterpillars (given order,
// BFS order) and the spanning-tree carving.  Always valid, never below the
// exact width.
CarvingDecomposition heuristic_carving(const Graph& g,
                                       const std::vector<int>* order_hint = nullptr);

// Bond variants for the curve-realization pipeline; require a 2-connected
// graph.  sweep grows one prefix along the order, skipping vertices whose
// addition would break a side's connectivity; greedy agglomerates the pair
// of parts with the cheapest valid union.
std::optional<CarvingDecomposition> sweep_bond_carving(const Graph& g,
                                                       const std::vector<int>& order);
CarvingDecomposition greedy_bond_carving(const Graph& g);
CarvingDecomposition heuristic_bond_carving(const Graph& g,
                                            const std::vector<int>* order_hint = nullptr);

}  // namespace knotcarve
