#include <doctest.h>

#include "knotcarve/error.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/pipeline.hpp"

using namespace knotcarve;

TEST_CASE("tubing the pretzel: thick sphere weight 8 from the lightest pair") {
    auto [d, sd] = pretzel_diagram(-2, 3, 7);
    auto mhs = tube(sd);
    CHECK(mhs.cost() == 8);
    // three push-offs of weight 4, one tube of weight 8
    std::vector<int> weights;
    for (const auto& t : mhs.thick) weights.push_back(t.weight);
    std::sort(weights.rbegin(), weights.rend());
    CHECK(weights == std::vector<int>{8, 4, 4, 4});
    auto w = mhs.width();
    CHECK(w.complexities ==
          std::vector<std::pair<int, int>>{{0, 8}, {0, 4}, {0, 4}, {0, 4}});
    // all weights are 4, so the tie-break picks spheres (0, 1)
    for (const auto& t : mhs.thick)
        if (t.kind == MultipleHeegaardSplitting::ThickKind::tube) {
            CHECK(t.tube_a == 0);
            CHECK(t.tube_b == 1);
        }
    CHECK(validate_splitting(mhs, sd).ok);
}

TEST_CASE("choose_tube_strand minimizes the weight sum with index tie-break") {
    SphereDecomposition sd;
    for (int w : {6, 2, 4}) sd.spheres.push_back({w, {}, -1, -1, false});
    SphereDecomposition::Component pants;
    pants.is_ball = false;
    pants.spheres = {0, 1, 2};
    // weights: s0=6, s1=2, s2=4; strands join (0,1),(1,2),(0,2) twice each
    pants.strands = {{0, 1, true}, {1, 2, true}, {0, 2, true},
                     {0, 1, true}, {1, 2, true}, {0, 2, true}};
    sd.components.push_back(pants);
    auto pick = choose_tube_strand(sd, 0);
    CHECK(pick.sphere_a == 1);  // 2 + 4 is the lightest pair
    CHECK(pick.sphere_b == 2);
}

TEST_CASE("choose_tube_strand: forced pair and impossible pants") {
    SphereDecomposition sd;
    for (int i = 0; i < 3; ++i) sd.spheres.push_back({2, {}, -1, -1, false});
    SphereDecomposition::Component pants;
    pants.is_ball = false;
    pants.spheres = {0, 1, 2};
    pants.strands = {{0, 1, true}, {0, 1, true}};
    sd.components.push_back(pants);
    auto pick = choose_tube_strand(sd, 0);
    CHECK(pick.sphere_a == 0);
    CHECK(pick.sphere_b == 1);

    sd.components[0].strands = {{0, 0, true}, {0, 0, true}};
    CHECK_THROWS_AS(choose_tube_strand(sd, 0), error);
}

TEST_CASE("bridge template tubing: push-offs keep the weight") {
    for (int b : {1, 3}) {
        auto [d, sd] = bridge_sphere_decomposition(b);
        auto mhs = tube(sd);
        CHECK(mhs.cost() == 2 * b);
        CHECK(mhs.thick.size() == 2);
        CHECK(validate_splitting(mhs, sd).ok);
    }
}

TEST_CASE("compression bodies match the four construction cases") {
    Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    auto res = run_pipeline(d);
    const auto& mhs = res.splitting;
    CHECK(validate_splitting(mhs, res.spheres).ok);
    for (const auto& b : mhs.bodies) {
        switch (b.kind) {
            case MultipleHeegaardSplitting::BodyKind::ball:
                CHECK(b.dminus.empty());
                CHECK(b.vertical == 0);
                CHECK((b.bridges == 1 || b.bridges == 2));
                break;
            case MultipleHeegaardSplitting::BodyKind::shell:
                CHECK(b.dminus.size() == 1);
                break;
            case MultipleHeegaardSplitting::BodyKind::pants:
                CHECK(b.dminus.size() == 2);
                CHECK(b.bridges == 0);
                break;
        }
    }
    // shells inside leaf balls carry exactly the boundary weight as verticals
    for (const auto& b : mhs.bodies) {
        if (b.kind != MultipleHeegaardSplitting::BodyKind::shell) continue;
        int minus = 0;
        for (int s : b.dminus) minus += mhs.thin_weights[s];
        CHECK(b.vertical == minus);
    }
}

TEST_CASE("splitting cost at most twice the sphere cost, census 2L-2") {
    for (const Diagram& d : {torus_diagram(3, 2), torus_diagram(5, 3),
                             trefoil_connect_sum(2)}) {
        auto res = run_pipeline(d);
        CHECK(res.splitting.cost() <= 2 * res.spheres.cost());
        int L = res.graph.map.vertex_count();
        CHECK(static_cast<int>(res.splitting.thick.size()) == 2 * L - 2);
        for (auto [g, c] : res.splitting.width().complexities) CHECK(g == 0);
    }
}

TEST_CASE("width comparison is lexicographic on sorted complexities") {
    SplittingWidth a, b;
    a.complexities = {{0, 8}, {0, 4}};
    b.complexities = {{0, 6}, {0, 6}};
    CHECK(SplittingWidth::compare(a, b) > 0);
    CHECK(SplittingWidth::compare(b, a) < 0);
    CHECK(SplittingWidth::compare(a, a) == 0);
}

TEST_CASE("theorem_main_report arithmetic with a supplied bound") {
    Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    auto rep = theorem_main_report(d, 16, 2);
    CHECK(rep.k == 2);
    CHECK(rep.k_supplied);
    CHECK(rep.bound_bridge() == 12);
    CHECK(rep.bound_meridional() == 24);
    CHECK(rep.ok_sphere);
    CHECK(rep.ok_splitting);
}

TEST_CASE("theorem_main_report full route on T(3,2)") {
    auto rep = theorem_main_report(torus_diagram(3, 2));
    CHECK(rep.all_ok());
    CHECK(rep.sphere_cost <= 4 * rep.k + 4);
    CHECK(rep.splitting_cost <= 8 * rep.k + 8);
    CHECK(rep.sphere_cost <= rep.cw_used);
    CHECK(!rep.text().empty());
    CHECK(!rep.markdown().empty());
}
