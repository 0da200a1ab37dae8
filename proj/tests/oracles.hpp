#pragma once

// Independent oracles for the width solvers.  These deliberately share no
// code with the library's solvers: carving width is minimized over an
// explicit enumeration of all leaf-labelled unrooted binary trees, and
// tree-width over all elimination orders.

#include <functional>
#include <utility>
#include <vector>

#include "knotcarve/graph.hpp"

namespace oracles {

using Tree = std::vector<std::pair<int, int>>;  // edges over nodes; leaves are 0..n-1

// every unrooted binary tree with leaves 0..n-1 ((2n-5)!! of them)
std::vector<Tree> all_carving_trees(int n);

int tree_width_of_carving(const knotcarve::Graph& g, const Tree& t, int leaves);
bool tree_is_bond(const knotcarve::Graph& g, const Tree& t, int leaves);

// minimum width over all trees
int brute_carving_width(const knotcarve::Graph& g);
// minimum over bond trees only; -1 when no bond tree exists
int brute_bond_carving_width(const knotcarve::Graph& g);

// exact tree-width by brute force over elimination orders
int brute_tree_width(const knotcarve::Graph& g);

}  // namespace oracles
