#include <doctest.h>

#include <random>
#include <set>

#include "knotcarve/diagram.hpp"
#include "knotcarve/error.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/subdivide.hpp"

using namespace knotcarve;

namespace {
const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8Pd = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,2] X[2,7,3,8]";
}  // namespace

TEST_CASE("trefoil PD code parses to a 3-crossing spherical diagram") {
    Diagram d = parse_pd(kTrefoilPd);
    CHECK(d.crossing_count() == 3);
    CHECK(d.map.edge_count() == 6);
    CHECK(d.face_count() == 5);
    CHECK(d.map.euler_characteristic() == 2);
}

TEST_CASE("figure-8 PD code parses") {
    Diagram d = parse_pd(kFigure8Pd);
    CHECK(d.crossing_count() == 4);
    CHECK(d.map.edge_count() == 8);
    CHECK(d.face_count() == 6);
}

TEST_CASE("malformed PD codes are rejected") {
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), error);             // arity
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4] X[1,2,3,4] X[1,2,3,4]"), error);  // label uses
    CHECK_THROWS_AS(parse_pd("X[1,1,2,2]"), error);           // one-crossing degenerate
    CHECK_THROWS_AS(parse_pd(""), error);
    // a two-component link: two disjoint kinks cannot appear in one PD code
    // with shared labels; a connected-sum-of-labels failure shows up as a
    // component or euler failure
    CHECK_THROWS_AS(parse_pd("X[1,2,1,2]"), error);
}

TEST_CASE("pretzel P(-2,3,7) emits a 12-crossing code that parses back") {
    auto [d, sd] = pretzel_diagram(-2, 3, 7);
    CHECK(d.crossing_count() == 12);
    CHECK(d.map.edge_count() == 24);
    CHECK(d.face_count() == 14);  // euler forces 2 - 12 + 24
    Diagram round = parse_pd(emit_pd(d));
    CHECK(round.crossing_count() == 12);
    CHECK(round.face_count() == 14);
}

TEST_CASE("PD emission is stable under round trips") {
    for (const char* code : {kTrefoilPd, kFigure8Pd}) {
        Diagram d = parse_pd(code);
        std::string once = emit_pd(d);
        std::string twice = emit_pd(parse_pd(once));
        CHECK(once == twice);
    }
}

TEST_CASE("round unknot and one-crossing unknot") {
    Diagram u3 = unknot_diagram(3);
    CHECK(u3.face_count() == 2);  // jordan curve
    CHECK(u3.component_count() == 1);
    Diagram k = one_crossing_unknot();
    CHECK(k.crossing_count() == 1);
    CHECK(k.component_count() == 1);
    CHECK(k.map.euler_characteristic() == 2);
}

TEST_CASE("subdivision: trefoil gains one vertex per parallel pair") {
    Diagram d = parse_pd(kTrefoilPd);
    auto g = subdivide_to_simple(d);
    CHECK(g.added_vertices == 3);
    CHECK(g.map.vertex_count() == 6);
    CHECK(g.map.edge_count() == 9);
    CHECK(g.to_graph().is_simple());
    CHECK(g.map.euler_characteristic() == 2);
}

TEST_CASE("subdivision: already-simple diagram is unchanged") {
    Diagram u = unknot_diagram(4);
    auto g = subdivide_to_simple(u);
    CHECK(g.added_vertices == 0);
    CHECK(g.map.vertex_count() == 4);
}

TEST_CASE("subdivision: each loop of the one-crossing unknot gains two vertices") {
    auto g = subdivide_to_simple(one_crossing_unknot());
    CHECK(g.added_vertices == 4);
    CHECK(g.to_graph().is_simple());
}

TEST_CASE("contracting the added degree-2 vertices restores the multigraph") {
    for (const Diagram& d : {parse_pd(kTrefoilPd), one_crossing_unknot(),
                             torus_diagram(3, 2)}) {
        auto g = subdivide_to_simple(d);
        auto contracted = contract_degree_two(g);
        REQUIRE(contracted.size() == static_cast<size_t>(d.map.edge_count()));
        for (int e = 0; e < d.map.edge_count(); ++e) {
            auto want = std::minmax(d.map.tail(e), d.map.head(e));
            auto got = std::minmax(contracted[e].first, contracted[e].second);
            CHECK(want == got);
        }
    }
}

TEST_CASE("face tracing satisfies euler's formula on generated diagrams") {
    for (const Diagram& d :
         {torus_diagram(3, 2), torus_diagram(5, 3), trefoil_connect_sum(3),
          two_bridge_diagram({2, 2}), pretzel_diagram(1, 1, 1).first}) {
        int V = d.map.vertex_count(), E = d.map.edge_count();
        int F = static_cast<int>(faces(d).size());
        CHECK(V - E + F == 2);
    }
}

TEST_CASE("dual of the round unknot is two vertices with parallel edges") {
    Diagram u = unknot_diagram(4);
    auto g = subdivide_to_simple(u);
    PlanarMap dual = dual_graph(g);
    CHECK(dual.vertex_count() == 2);
    CHECK(dual.edge_count() == 4);
    for (int e = 0; e < dual.edge_count(); ++e) CHECK(dual.tail(e) != dual.head(e));
}

TEST_CASE("dual has one vertex per face and shares edge identifiers") {
    auto g = subdivide_to_simple(parse_pd(kTrefoilPd));
    PlanarMap dual = dual_graph(g);
    CHECK(dual.vertex_count() == static_cast<int>(g.map.faces().size()));
    CHECK(dual.edge_count() == g.map.edge_count());
    CHECK(dual.euler_characteristic() == 2);
}

TEST_CASE("dual of the dual recovers the primal up to relabeling") {
    auto g = subdivide_to_simple(parse_pd(kTrefoilPd));
    PlanarMap dd = g.map.dual().dual();
    CHECK(dd.vertex_count() == g.map.vertex_count());
    CHECK(dd.edge_count() == g.map.edge_count());
    // same rotation multiset sizes and same edge incidences up to renaming
    std::multiset<int> deg1, deg2;
    for (const auto& r : g.map.rot) deg1.insert(static_cast<int>(r.size()));
    for (const auto& r : dd.rot) deg2.insert(static_cast<int>(r.size()));
    CHECK(deg1 == deg2);
    CHECK(dd.euler_characteristic() == 2);
}

TEST_CASE("every vertex cut of a diagram graph is even") {
    std::mt19937_64 rng(20260810);
    for (const Diagram& d : {parse_pd(kTrefoilPd), torus_diagram(4, 3),
                             pretzel_diagram(-2, 3, 7).first}) {
        Graph g;
        g.n = d.map.vertex_count();
        for (int e = 0; e < d.map.edge_count(); ++e) g.add_edge(d.map.tail(e), d.map.head(e));
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<char> side(g.n, 0);
            for (int v = 0; v < g.n; ++v) side[v] = rng() & 1;
            int cut = 0;
            for (auto [u, v] : g.edges)
                if (side[u] != side[v]) cut++;
            CHECK(cut % 2 == 0);
        }
    }
}
