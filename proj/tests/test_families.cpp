#include <doctest.h>

#include "knotcarve/carving_solve.hpp"
#include "knotcarve/error.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/subdivide.hpp"

using namespace knotcarve;

TEST_CASE("torus diagrams: crossing counts and validity") {
    CHECK(torus_diagram(3, 2).crossing_count() == 3);
    CHECK(torus_diagram(9, 7).crossing_count() == 54);
    CHECK_THROWS_AS(torus_diagram(4, 2), error);
    CHECK_THROWS_AS(torus_diagram(1, 5), error);
}

TEST_CASE("every generated diagram passes full validation") {
    std::vector<Diagram> batch;
    batch.push_back(torus_diagram(3, 2));
    batch.push_back(torus_diagram(5, 4));
    batch.push_back(pretzel_diagram(-2, 3, 7).first);
    batch.push_back(pretzel_diagram(1, 1, 1).first);
    batch.push_back(trefoil_connect_sum(4));
    batch.push_back(two_bridge_diagram({3}));
    batch.push_back(two_bridge_diagram({2, 2}));
    for (const auto& d : batch) d.validate();  // throws on failure
}

TEST_CASE("pretzel parameters that close into links are rejected") {
    CHECK_THROWS_AS(pretzel_diagram(2, 2, 2), error);
    CHECK_THROWS_AS(pretzel_diagram(0, 1, 1), error);
    auto [d, sd] = pretzel_diagram(1, 1, 1);
    CHECK(d.crossing_count() == 3);
    CHECK(sd.width_list() == std::vector<int>{4, 4, 4});
}

TEST_CASE("trefoil connect sums: 3n crossings in a chain") {
    CHECK(trefoil_connect_sum(1).crossing_count() == 3);
    CHECK(trefoil_connect_sum(5).crossing_count() == 15);
    CHECK_THROWS_AS(trefoil_connect_sum(0), error);
}

TEST_CASE("connect-sum heuristic width plateaus") {
    auto width_of = [](int n) {
        auto g = subdivide_to_simple(trefoil_connect_sum(n));
        auto plain = g.to_graph();
        auto order = g.sweep_order();
        return carving_width(plain, heuristic_carving(plain, &order));
    };
    int w2 = width_of(2);
    CHECK(width_of(5) == w2);
    CHECK(width_of(20) == w2);
}

TEST_CASE("two-bridge plats: crossing counts and link rejection") {
    CHECK(two_bridge_diagram({3}).crossing_count() == 3);
    CHECK(two_bridge_diagram({2, 2}).crossing_count() == 4);   // figure-8 fraction 5/2
    CHECK(two_bridge_diagram({2, 1}).crossing_count() == 3);   // 3/1, trefoil again
    CHECK_THROWS_AS(two_bridge_diagram({2, 2, 2}), error);     // 12/5 is a link
    CHECK_THROWS_AS(two_bridge_diagram({2, 0, 2}), error);
}

TEST_CASE("torus lower bound: contrapositive arithmetic") {
    CHECK(tw_lower_bound_report(9, 7).tw_lower == 1);
    CHECK(tw_lower_bound_report(101, 100).tw_lower == 24);
    CHECK(tw_lower_bound_report(3, 2).tw_lower == 0);
    CHECK_THROWS_AS(tw_lower_bound_report(4, 2), error);
}

TEST_CASE("lower bound is symmetric in p and q") {
    for (auto [p, q] : {std::pair{9, 7}, {8, 3}, {11, 5}}) {
        CHECK(tw_lower_bound_report(p, q).tw_lower ==
              tw_lower_bound_report(q, p).tw_lower);
    }
}

TEST_CASE("random diagrams are deterministic per seed and 2-connected") {
    for (uint64_t seed : {1ull, 2ull, 42ull}) {
        Diagram a = random_knot_diagram(seed);
        Diagram b = random_knot_diagram(seed);
        CHECK(a.map.rot == b.map.rot);
        CHECK(subdivide_to_simple(a).to_graph().biconnected());
    }
}

TEST_CASE("family spec parsing") {
    auto t = FamilySpec::parse("torus(9,7)");
    CHECK(t.kind == FamilySpec::Kind::torus);
    CHECK(t.params == std::vector<int>{9, 7});
    CHECK(t.build().crossing_count() == 54);
    auto p = FamilySpec::parse("pretzel(-2,3,7)");
    CHECK(p.build().crossing_count() == 12);
    CHECK(FamilySpec::parse("sum(3)").build().crossing_count() == 9);
    CHECK(FamilySpec::parse("two-bridge(2,2)").build().crossing_count() == 4);
    CHECK_THROWS_AS(FamilySpec::parse("mystery(1)"), error);
    CHECK_THROWS_AS(FamilySpec::parse("torus(9)").build(), error);
}
