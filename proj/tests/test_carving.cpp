#include <doctest.h>

#include <numeric>
#include <random>

#include "knotcarve/carving_solve.hpp"
#include "knotcarve/error.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/subdivide.hpp"
#include "oracles.hpp"

using namespace knotcarve;

namespace {

Graph path_graph(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph subdivided_trefoil() {
    return subdivide_to_simple(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")).to_graph();
}

}  // namespace

TEST_CASE("width of the one-edge graph is the edge count between the sides") {
    Graph p2 = path_graph(2);
    auto res = exact_carving_width(p2, false);
    CHECK(res.width == 1);
    CHECK(res.dec.node_count() == 2);
    CHECK(res.dec.tree_edges().size() == 1);
}

TEST_CASE("caterpillar over the cycle order carves C4 with width 2") {
    Graph c4 = cycle_graph(4);
    std::vector<int> order = {0, 1, 2, 3};
    auto dec = caterpillar_carving(c4, order);
    CHECK(carving_width(c4, dec) == 2);
}

TEST_CASE("cycles have carving width 2") {
    for (int n = 4; n <= 10; ++n) {
        Graph c = cycle_graph(n);
        auto res = exact_carving_width(c, false, 16);
        CHECK(res.width == 2);
        if (n <= 7) CHECK(oracles::brute_carving_width(c) == 2);
    }
}

TEST_CASE("exact width of the subdivided trefoil matches the brute-force oracle") {
    Graph g = subdivided_trefoil();
    auto res = exact_carving_width(g, false);
    CHECK(res.width == oracles::brute_carving_width(g));
    CHECK(res.width == 4);
    res.dec.validate(g.n);
}

TEST_CASE("middle sets on diagram graphs are always even") {
    Graph g = subdivided_trefoil();
    auto res = exact_carving_width(g, true);
    for (int s : middle_sizes(g, res.dec)) CHECK(s % 2 == 0);
}

TEST_CASE("is_bond: trivial, counterexample, and solver postcondition") {
    Graph p2 = path_graph(2);
    auto dec2 = exact_carving_width(p2, false).dec;
    CHECK(is_bond(p2, dec2));  // singletons are connected

    // C4 split into opposite vertices at some tree edge is not bond
    Graph c4 = cycle_graph(4);
    auto bad = caterpillar_carving(c4, {0, 2, 1, 3});
    CHECK_FALSE(is_bond(c4, bad));

    auto good = exact_carving_width(c4, true).dec;
    CHECK(is_bond(c4, good));
}

TEST_CASE("bond-restricted solving refuses bridges and cut vertices") {
    CHECK_THROWS_AS(exact_carving_width(path_graph(2), true), error);
    CHECK_THROWS_AS(exact_carving_width(path_graph(5), true), error);
    // two triangles sharing a vertex: bridgeless but with a cut vertex
    Graph g;
    g.n = 5;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(3, 4);
    CHECK_FALSE(g.has_bridge());
    CHECK_THROWS_AS(exact_carving_width(g, true), error);
    // and indeed no bond tree exists at all
    CHECK(oracles::brute_bond_carving_width(g) == -1);
}

TEST_CASE("solver cap is enforced") {
    Graph c = cycle_graph(18);
    CHECK_THROWS_AS(exact_carving_width(c, false, 16), error);
    try {
        exact_carving_width(c, false, 16);
    } catch (const error& e) {
        CHECK(e.kind == errc::solver_cap);
    }
}

TEST_CASE("tree-width bounds from carving width") {
    auto b1 = tw_bounds_from_cw(4, 4);
    CHECK(b1.tw_lower == 0);
    CHECK(b1.tw_upper == 5);
    auto b2 = tw_bounds_from_cw(6, 4);
    CHECK(b2.tw_lower == 1);
    CHECK(b2.tw_upper == 8);
    auto b3 = tw_bounds_from_cw(1, 1);
    CHECK(b3.tw_lower == 0);
    CHECK(b3.tw_upper == 0);
    CHECK_THROWS_AS(tw_bounds_from_cw(0, 4), error);
}

TEST_CASE("heuristic width never beats the exact width") {
    auto census5 = connected_graph_census(5);
    for (const auto& g : census5) {
        int exact = exact_carving_width(g, false).width;
        int heur = carving_width(g, heuristic_carving(g));
        CHECK(heur >= exact);
    }
}

TEST_CASE("spanning-tree carving keeps tree inputs within max degree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph t;
        t.n = n;
        for (int v = 1; v < n; ++v) t.add_edge(static_cast<int>(rng() % v), v);
        auto dec = heuristic_carving(t);
        CHECK(carving_width(t, dec) <= t.max_degree());
    }
}

TEST_CASE("sweep and greedy bond heuristics produce bond carvings") {
    for (const Diagram& d :
         {torus_diagram(5, 3), pretzel_diagram(-2, 3, 7).first, trefoil_connect_sum(3)}) {
        auto g = subdivide_to_simple(d);
        auto plain = g.to_graph();
        auto order = g.sweep_order();
        auto dec = heuristic_bond_carving(plain, &order);
        CHECK(is_bond(plain, dec));
        dec.validate(plain.n);
    }
}

TEST_CASE("sweep bond carving of a torus braid stays near twice the strand count") {
    // T(9,7): the sweep order crosses at most 2q strands plus a constant
    Diagram d = torus_diagram(9, 7);
    auto g = subdivide_to_simple(d);
    auto plain = g.to_graph();
    auto order = g.sweep_order();
    auto dec = heuristic_bond_carving(plain, &order);
    CHECK(carving_width(plain, dec) <= 2 * 7 + 4);
}

TEST_CASE("solver is deterministic and thread-count independent") {
    Graph g = subdivided_trefoil();
    auto a = exact_carving_width(g, true, 16, 1);
    auto b = exact_carving_width(g, true, 16, 4);
    CHECK(a.width == b.width);
    CHECK(a.dec.nbrs == b.dec.nbrs);
    CHECK(a.dec.leaf_vertex == b.dec.leaf_vertex);
}

TEST_CASE("census counts match the known number of connected graphs") {
    const int expect[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(connected_graph_census(n).size()) == expect[n]);
}
