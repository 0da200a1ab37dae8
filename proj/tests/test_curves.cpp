#include <doctest.h>

#include "knotcarve/carving_solve.hpp"
#include "knotcarve/curves.hpp"
#include "knotcarve/error.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/pd_code.hpp"

using namespace knotcarve;

namespace {

SimpleDiagramGraph trefoil_graph() {
    return subdivide_to_simple(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
}

CarvingDecomposition bond_carving_for(const SimpleDiagramGraph& g, int cap = 16) {
    auto plain = g.to_graph();
    if (plain.n <= cap) return exact_carving_width(plain, true, cap).dec;
    auto order = g.sweep_order();
    return heuristic_bond_carving(plain, &order);
}

}  // namespace

TEST_CASE("theta-like graph: the 2-leaf bond tree realizes one dual cycle") {
    // round unknot subdivided: take the 3-cycle; a 2-vertex cut is a theta
    // in miniature -- use the smallest diagram with a 2-leaf split instead:
    // C3 has three vertices, so use a single tree edge of its carving
    Diagram u = unknot_diagram(3);
    auto g = subdivide_to_simple(u);
    auto dec = bond_carving_for(g);
    auto fam = realize(g, dec);
    CHECK(fam.curves.size() == dec.tree_edges().size());
    for (const auto& c : fam.curves) CHECK(c.edge_cycle.size() == 2);
    CHECK(validate(fam, g, dec).ok);
}

TEST_CASE("trefoil: one curve per carving tree edge, 2L-3 in total") {
    auto g = trefoil_graph();
    auto dec = bond_carving_for(g);
    auto fam = realize(g, dec);
    int L = g.map.vertex_count();
    CHECK(static_cast<int>(fam.curves.size()) == 2 * L - 3);
    CHECK(validate(fam, g, dec).ok);
}

TEST_CASE("pretzel natural blocks: curves cross four edges each") {
    auto [d, sd] = pretzel_diagram(-2, 3, 7);
    auto g = subdivide_to_simple(d);
    auto dec = bond_carving_for(g, 16);
    auto fam = realize(g, dec);
    auto rep = validate(fam, g, dec);
    CHECK(rep.ok);
    // the minimal-width carving of the pretzel graph has only weight-4 and
    // weight-2 cuts; every curve length matches its middle set
    auto plain = g.to_graph();
    for (const auto& c : fam.curves) {
        auto mid = middle_set(plain, dec, c.tree_a, c.tree_b);
        CHECK(c.edge_cycle.size() == mid.size());
    }
}

TEST_CASE("realize rejects non-bond input") {
    Graph c4;
    c4.n = 4;
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    // embed C4 as the round unknot graph
    Diagram u = unknot_diagram(4);
    auto g = subdivide_to_simple(u);
    auto bad = caterpillar_carving(c4, {0, 2, 1, 3});
    CHECK_THROWS_AS(realize(g, bad), error);
}

TEST_CASE("validation catches interleaved chords") {
    auto g = trefoil_graph();
    auto dec = bond_carving_for(g);
    auto fam = realize(g, dec);
    REQUIRE(validate(fam, g, dec).ok);
    // swap the crossing order on one shared edge: laminarity must break
    bool mutated = false;
    CurveFamily broken = fam;
    for (auto& ord : broken.crossing_order)
        if (ord.size() >= 2 && !mutated) {
            std::swap(ord[0], ord[1]);
            mutated = true;
        }
    REQUIRE(mutated);
    CHECK_FALSE(validate(broken, g, dec).ok);
}

TEST_CASE("realization is deterministic") {
    auto g = trefoil_graph();
    auto dec = bond_carving_for(g);
    auto a = realize(g, dec);
    auto b = realize(g, dec);
    REQUIRE(a.curves.size() == b.curves.size());
    for (size_t i = 0; i < a.curves.size(); ++i) {
        CHECK(a.curves[i].edge_cycle == b.curves[i].edge_cycle);
        CHECK(a.curves[i].face_cycle == b.curves[i].face_cycle);
    }
    CHECK(a.crossing_order == b.crossing_order);
}

TEST_CASE("realize and validate agree on a batch of random diagrams") {
    for (int i = 0; i < 100; ++i) {
        Diagram d = random_knot_diagram(1000 + static_cast<uint64_t>(i));
        auto g = subdivide_to_simple(d);
        auto dec = bond_carving_for(g, 14);
        auto fam = realize(g, dec);
        auto rep = validate(fam, g, dec);
        if (!rep.ok) {
            for (const auto& f : rep.failures) MESSAGE(f);
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("curves separate exactly the leaf bipartitions") {
    auto g = trefoil_graph();
    auto plain = g.to_graph();
    auto dec = bond_carving_for(g);
    auto fam = realize(g, dec);
    for (const auto& c : fam.curves) {
        auto mid = middle_set(plain, dec, c.tree_a, c.tree_b);
        auto sorted = c.edge_cycle;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == mid);
    }
}
